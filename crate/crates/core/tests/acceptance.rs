//! Acceptance suite. Every criterion is exact (zero tolerance): the corpus
//! spans the catalog algebras plus seeded random Leibniz algebras, and every
//! claim is cross-checked against independent oracles (naive cofactor
//! determinants, plain rational elimination, direct structure-constant
//! contractions) rather than the code paths under test.

use leibniz_ly::*;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CATALOG_NAMES: [&str; 7] = [
    "abelian:1",
    "abelian:2",
    "abelian:3",
    "abelian:4",
    "leibniz2",
    "sl2",
    "heisenberg",
];

fn corpus() -> Vec<Algebra> {
    let mut algebras: Vec<Algebra> = CATALOG_NAMES.iter().map(|n| catalog(n).unwrap()).collect();
    for seed in 1..=25u64 {
        let dim = 1 + ((seed - 1) as usize % 3);
        algebras.push(random_leibniz(dim, seed, 10_000).expect("rejection sampling terminates"));
    }
    algebras
}

fn seeded_invertible(dim: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = Matrix::from_fn(dim, dim, |_, _| rat(rng.gen_range(-2..=2)));
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// Every representation exercised by the suite: adjoint, dual of adjoint,
/// symmetric and antisymmetric from the adjoint `l` family, and five seeded
/// conjugates of the adjoint.
fn reps_for(a: &Algebra, salt: u64) -> Vec<LeibnizRep> {
    let adj = adjoint_rep(a).unwrap();
    let mut reps = vec![
        adj.clone(),
        dual_rep(&adj).unwrap(),
        symmetric_rep_from(a, adj.l()).unwrap(),
        antisymmetric_rep_from(a, adj.l()).unwrap(),
    ];
    for k in 0..5 {
        let psi = seeded_invertible(a.dim(), salt * 100 + k);
        reps.push(conjugate_rep(&adj, &psi).unwrap());
    }
    reps
}

/// The derived cross-check identity may never be the only failure.
fn assert_cross_check_consistent(report: &AxiomReport) {
    if report.has_axiom("r-cross") {
        assert!(
            report.has_axiom("r-comp") || report.has_axiom("r-bracket"),
            "r-cross fired alone"
        );
    }
}

// -- independent oracles ----------------------------------------------------

fn naive_det(m: &Matrix) -> Rat {
    let n = m.rows();
    if n == 0 {
        return rat(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = rat(0);
    for j in 0..n {
        let c = m.get(0, j);
        if c.is_zero() {
            continue;
        }
        let minor = Matrix::from_fn(n - 1, n - 1, |r, col| {
            let src = if col < j { col } else { col + 1 };
            m.get(r + 1, src).clone()
        });
        let term = c * &naive_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn naive_rank(m: &Matrix) -> usize {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Rat>> = (0..nr)
        .map(|r| (0..nc).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..nc {
        let Some(p) = (rank..nr).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for e in &mut a[rank] {
            *e /= pivot.clone();
        }
        for r in 0..nr {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..nc {
                    let sub = &a[rank][c] * &f;
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

/// Intertwining re-verified by direct multiplication, plus invertibility via
/// the cofactor oracle.
fn verify_witness_leibniz(psi: &Matrix, r1: &LeibnizRep, r2: &LeibnizRep) {
    assert!(!naive_det(psi).is_zero(), "witness not invertible");
    for i in 0..r1.algebra().dim() {
        assert_eq!(psi * &r1.l()[i], &r2.l()[i] * psi, "l intertwining fails at {i}");
        assert_eq!(psi * &r1.r()[i], &r2.r()[i] * psi, "r intertwining fails at {i}");
    }
}

fn verify_witness_ly(psi: &Matrix, r1: &LYRep, r2: &LYRep) {
    assert!(!naive_det(psi).is_zero(), "witness not invertible");
    let n = r1.algebra().dim();
    for i in 0..n {
        assert_eq!(psi * &r1.rho()[i], &r2.rho()[i] * psi, "rho intertwining fails at {i}");
        for j in 0..n {
            assert_eq!(
                psi * &r1.theta()[i][j],
                &r2.theta()[i][j] * psi,
                "theta intertwining fails at ({i},{j})"
            );
        }
    }
}

// -- criteria ---------------------------------------------------------------

#[test]
fn induced_reps_satisfy_all_ly_axioms() {
    for (idx, a) in corpus().iter().enumerate() {
        for rep in reps_for(a, idx as u64 + 1) {
            let report = check_leibniz_rep(&rep);
            assert!(report.passed(), "{:?}: rep fails its own axioms", a.name());
            assert_cross_check_consistent(&report);
            let induced = induce_ly_rep(&rep).unwrap();
            let ly_report = check_ly_rep(&induced);
            assert!(
                ly_report.passed(),
                "{:?}: induced rep violates {:?}",
                a.name(),
                ly_report.violations().first()
            );
        }
    }
    println!("acceptance: induced_reps_satisfy_all_ly_axioms PASS");
}

#[test]
fn induced_adjoint_equals_ly_adjoint() {
    for name in CATALOG_NAMES {
        let a = catalog(name).unwrap();
        let via_leibniz = induce_ly_rep(&adjoint_rep(&a).unwrap()).unwrap();
        let via_ly = ly_adjoint_rep(&leibniz_to_ly(&a).unwrap()).unwrap();
        assert!(via_leibniz.algebra().same_structure(via_ly.algebra()), "{name}: algebras differ");
        assert_eq!(via_leibniz.rho(), via_ly.rho(), "{name}: rho differs");
        assert_eq!(via_leibniz.theta(), via_ly.theta(), "{name}: theta differs");
        assert_eq!(via_leibniz.d(), via_ly.d(), "{name}: d differs");
    }
    println!("acceptance: induced_adjoint_equals_ly_adjoint PASS");
}

#[test]
fn duals_of_all_verified_reps_pass() {
    for (idx, a) in corpus().iter().enumerate() {
        for rep in reps_for(a, idx as u64 + 1) {
            let dual = dual_rep(&rep).unwrap();
            let report = check_leibniz_rep(&dual);
            assert!(
                report.passed(),
                "{:?}: dual violates {:?}",
                a.name(),
                report.violations().first()
            );
            assert_cross_check_consistent(&report);
        }
    }
    println!("acceptance: duals_of_all_verified_reps_pass PASS");
}

#[test]
fn intertwiners_transfer_to_induced_reps() {
    for k in 0..10u64 {
        let name = CATALOG_NAMES[k as usize % CATALOG_NAMES.len()];
        let a = catalog(name).unwrap();
        let rep = adjoint_rep(&a).unwrap();
        let psi = seeded_invertible(a.dim(), 1_000 + k);
        let conj = conjugate_rep(&rep, &psi).unwrap();

        let report = verify_induced_equivalence(&rep, &conj, &psi).unwrap();
        assert!(
            report.passed(),
            "{name}: psi fails to intertwine the induced reps: {:?}",
            report.violations().first()
        );

        let ind1 = induce_ly_rep(&rep).unwrap();
        let ind2 = induce_ly_rep(&conj).unwrap();
        let verdict = decide_equivalence_ly(&ind1, &ind2).unwrap();
        assert_eq!(verdict.status, EquivStatus::Equivalent, "{name}: {}", verdict.note);
        verify_witness_ly(&verdict.witness.unwrap(), &ind1, &ind2);
    }
    println!("acceptance: intertwiners_transfer_to_induced_reps PASS");
}

#[test]
fn symmetric_and_antisymmetric_closed_forms() {
    for a in corpus() {
        let adj = adjoint_rep(&a).unwrap();
        let n = a.dim();

        let sym = symmetric_rep_from(&a, adj.l()).unwrap();
        let ind = induce_ly_rep(&sym).unwrap();
        for i in 0..n {
            assert_eq!(ind.rho()[i], sym.l()[i].scale(&rat(2)), "{:?}: rho != 2l", a.name());
            for j in 0..n {
                assert_eq!(
                    ind.theta()[i][j],
                    -&(&sym.l()[j] * &sym.l()[i]),
                    "{:?}: theta != -l(y)l(x)",
                    a.name()
                );
            }
        }

        let anti = antisymmetric_rep_from(&a, adj.l()).unwrap();
        let ind = induce_ly_rep(&anti).unwrap();
        for i in 0..n {
            assert_eq!(ind.rho()[i], anti.l()[i], "{:?}: rho != l", a.name());
            for j in 0..n {
                assert!(ind.theta()[i][j].is_zero(), "{:?}: theta != 0", a.name());
            }
        }
    }
    println!("acceptance: symmetric_and_antisymmetric_closed_forms PASS");
}

#[test]
fn perturbed_structures_are_flagged() {
    // bump one structure constant of sl2; locate every violating triple with
    // a direct double-contraction of the raw constants
    let a = catalog("sl2").unwrap();
    let mut t = a.product().clone();
    let bumped = t.get(0, 1, 2) + &rat(1);
    t.set(0, 1, 2, bumped);
    let broken = Algebra::new(t.clone(), None);
    let report = check_left_leibniz(&broken);
    assert!(!report.passed());

    let n = 3;
    let mut expected: Vec<(Vec<usize>, Vec<Rat>)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut defect = vec![rat(0); n];
                for (m, d) in defect.iter_mut().enumerate() {
                    for p in 0..n {
                        *d += t.get(j, k, p) * t.get(i, p, m);
                        *d -= t.get(i, j, p) * t.get(p, k, m);
                        *d -= t.get(i, k, p) * t.get(j, p, m);
                    }
                }
                if !defect.iter().all(Rat::is_zero) {
                    expected.push((vec![i, j, k], defect));
                }
            }
        }
    }
    assert!(!expected.is_empty(), "perturbation did not break anything");
    let reported: Vec<(Vec<usize>, Vec<Rat>)> = report
        .violations()
        .iter()
        .map(|v| (v.indices.clone(), v.defect.clone()))
        .collect();
    assert_eq!(reported, expected, "checker and brute force disagree");

    // perturbing one off-diagonal theta matrix of an induced rep must break
    // at least one axiom; the R1 defect at (0,1) is recomputed directly
    let ind = induce_ly_rep(&adjoint_rep(&a).unwrap()).unwrap();
    let (ly, dim_v, rho, mut theta, d) = ind.into_parts();
    theta[0][1] = &theta[0][1] + &Matrix::unit(3, 3, 0, 1);
    let broken = LYRep::new(ly.clone(), dim_v, rho.clone(), theta.clone(), d.clone()).unwrap();
    let rep_report = check_ly_rep(&broken);
    assert!(!rep_report.passed());

    let mut rho_bracket = Matrix::zeros(3, 3);
    for (p, c) in ly.bra(0, 1).iter().enumerate() {
        rho_bracket = &rho_bracket + &rho[p].scale(c);
    }
    let comm = &(&rho[0] * &rho[1]) - &(&rho[1] * &rho[0]);
    let direct_defect = &(&(&(&d[0][1] - &theta[1][0]) + &theta[0][1]) + &rho_bracket) - &comm;
    assert!(!direct_defect.is_zero());
    let r1_violation = rep_report
        .violations()
        .iter()
        .find(|v| v.axiom == "R1" && v.indices == vec![0, 1])
        .expect("R1 violation at (0,1)");
    assert_eq!(r1_violation.defect, direct_defect.entries().to_vec());

    println!("acceptance: perturbed_structures_are_flagged PASS");
}

#[test]
fn equivalence_decisions_are_sound() {
    // grid-certified negative
    let rep = adjoint_rep(&catalog("leibniz2").unwrap()).unwrap();
    let zero = LeibnizRep::zero(rep.algebra().clone(), 2);
    let verdict = decide_equivalence_leibniz(&rep, &zero).unwrap();
    assert_eq!(verdict.status, EquivStatus::NotEquivalent);
    assert!(verdict.note.contains("grid"), "expected a grid certificate: {}", verdict.note);

    // reflexivity with identity witness
    for name in ["leibniz2", "sl2", "heisenberg"] {
        let r = adjoint_rep(&catalog(name).unwrap()).unwrap();
        let verdict = decide_equivalence_leibniz(&r, &r).unwrap();
        assert_eq!(verdict.status, EquivStatus::Equivalent);
        let w = verdict.witness.unwrap();
        assert_eq!(w, Matrix::identity(r.dim_v()), "{name}: witness is not the identity");
        verify_witness_leibniz(&w, &r, &r);
    }

    // conjugate pairs, witnesses re-verified
    for (k, name) in ["leibniz2", "sl2", "heisenberg", "abelian:3"].iter().enumerate() {
        let r = adjoint_rep(&catalog(name).unwrap()).unwrap();
        let psi = seeded_invertible(r.dim_v(), 7_000 + k as u64);
        let conj = conjugate_rep(&r, &psi).unwrap();
        let verdict = decide_equivalence_leibniz(&r, &conj).unwrap();
        assert_eq!(verdict.status, EquivStatus::Equivalent, "{name}: {}", verdict.note);
        verify_witness_leibniz(&verdict.witness.unwrap(), &r, &conj);
    }
    println!("acceptance: equivalence_decisions_are_sound PASS");
}

#[test]
fn kernel_and_det_match_naive_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1CE);
    for round in 0..50 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m = Matrix::from_fn(rows, cols, |_, _| {
            ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
        });

        if rows == cols {
            assert_eq!(m.det().unwrap(), naive_det(&m), "round {round}: det mismatch");
        }

        let basis = m.kernel_basis();
        assert_eq!(
            basis.len(),
            cols - naive_rank(&m),
            "round {round}: kernel dimension mismatch"
        );
        for v in &basis {
            // naive matrix-vector product, written out
            for r in 0..rows {
                let mut acc = rat(0);
                for c in 0..cols {
                    acc += m.get(r, c) * &v[c];
                }
                assert!(acc.is_zero(), "round {round}: kernel vector not annihilated");
            }
        }
        if !basis.is_empty() {
            let stacked = Matrix::from_rows(basis.clone());
            assert_eq!(naive_rank(&stacked), basis.len(), "round {round}: basis dependent");
        }
    }
    println!("acceptance: kernel_and_det_match_naive_oracles PASS");
}
