//! Property suites: the numerical invariants each module promises, run
//! over seeded random inputs.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_gauge::bounds;
use spectral_gauge::exact;
use spectral_gauge::gauge::{self, GaugeOracle, PolarConfig};
use spectral_gauge::graph::{
    parse_graph, GeneralizedAdjacency, Graph, GraphFamily, GraphFormat, WeightVector,
};
use spectral_gauge::linalg::{self, SymMatrix};
use spectral_gauge::sdp::SdpConfig;
use spectral_gauge::simplex::{self, LinearProgram, LpStatus, Relation, Sense};

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> SymMatrix {
    let entries: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * scale).collect())
        .collect();
    SymMatrix::from_fn(n, |i, j| entries[i][j])
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

// ---------------------------------------------------------------------------
// dense-linalg
// ---------------------------------------------------------------------------

#[test]
fn eigen_residuals_on_a_thousand_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1000 {
        let n = 1 + (trial % 30);
        let m = random_symmetric(&mut rng, n, 10.0);
        let e = m.eigen().unwrap();
        assert!(
            e.orthogonality_residual() <= 1e-10,
            "trial {trial}: orthogonality {}",
            e.orthogonality_residual()
        );
        let rebuilt = e.map_eigenvalues(|l| l);
        let residual = rebuilt.sub(&m).norm_max();
        assert!(
            residual <= 1e-9 * (1.0 + m.norm_max()),
            "trial {trial}: reconstruction {residual}"
        );
        for k in 1..n {
            assert!(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
        }
    }
}

#[test]
fn eigenvalues_invariant_under_permutation_similarity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = 2 + (rng.gen::<usize>() % 10);
        let m = random_symmetric(&mut rng, n, 3.0);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen::<usize>() % (i + 1);
            perm.swap(i, j);
        }
        let permuted = SymMatrix::from_fn(n, |i, j| m.get(perm[i], perm[j]));
        let ev_a = m.eigen().unwrap().eigenvalues;
        let ev_b = permuted.eigen().unwrap().eigenvalues;
        for (a, b) in ev_a.iter().zip(&ev_b) {
            assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()), "{a} vs {b}");
        }
    }
}

/// Products RS and SR share their nonzero spectrum; exercised through the
/// symmetric pairs W^{1/2}MW^{1/2} and M^{1/2}WM^{1/2} that the bounds use.
#[test]
fn swapped_products_share_nonzero_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = 2 + (rng.gen::<usize>() % 8);
        // Random PSD factors.
        let r = random_symmetric(&mut rng, n, 2.0);
        let m = r.congruence(&SymMatrix::identity(n)); // r² ⪰ 0
        let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let m_half = linalg::psd_sqrt(&m).unwrap();
        let sw: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();

        // a = W^{1/2} M W^{1/2},  b = M^{1/2} W M^{1/2}
        let a = SymMatrix::from_fn(n, |i, j| sw[i] * m.get(i, j) * sw[j]);
        let b = m_half.scaled_congruence(&w);
        let mut ev_a: Vec<f64> = a.eigen().unwrap().eigenvalues;
        let mut ev_b: Vec<f64> = b.eigen().unwrap().eigenvalues;
        ev_a.retain(|v| v.abs() > 1e-8);
        ev_b.retain(|v| v.abs() > 1e-8);
        ev_a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        ev_b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_eq!(ev_a.len(), ev_b.len(), "nonzero spectrum sizes differ");
        for (x, y) in ev_a.iter().zip(&ev_b) {
            assert!((x - y).abs() <= 1e-8 * (1.0 + x.abs()), "{x} vs {y}");
        }
    }
}

#[test]
fn sqrt_commutes_with_pinv() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let n = 2 + (rng.gen::<usize>() % 8);
        let r = random_symmetric(&mut rng, n, 1.5);
        // Rank-deficient PSD: square a matrix with a zeroed column.
        let mut rows: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| r.get(i, j)).collect()).collect();
        for row in rows.iter_mut() {
            row[0] = 0.0;
        }
        let base = SymMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| rows[i][k] * rows[j][k]).sum()
        });
        let sqrt_then_pinv = linalg::pinv(&linalg::psd_sqrt(&base).unwrap()).unwrap();
        let pinv_then_sqrt = linalg::psd_sqrt(&linalg::pinv(&base).unwrap()).unwrap();
        let dev = sqrt_then_pinv.sub(&pinv_then_sqrt).norm_max();
        assert!(dev <= 1e-8 * (1.0 + sqrt_then_pinv.norm_max()), "deviation {dev}");
    }
}

#[test]
fn pinv_of_regular_graph_form_acts_on_ones() {
    // (I+Ã)^† 1 = (1 − λ/τ)^{-1} 1 on a regular graph.
    let c5 = GraphFamily::Cycle(5).build().unwrap();
    let form = c5.adjacency_matrix().tilde_form().unwrap();
    let pinv = linalg::pinv(&form.i_plus).unwrap();
    let ones = vec![1.0; 5];
    let image = pinv.apply(&ones);
    let tau = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
    let expected = 1.0 / (1.0 - 2.0 / tau);
    for v in image {
        assert!((v - expected).abs() <= 1e-10, "{v} vs {expected}");
    }
}

// ---------------------------------------------------------------------------
// graph-core
// ---------------------------------------------------------------------------

#[test]
fn nonzero_generalized_adjacency_has_negative_eigenvalue() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..60 {
        let n = 2 + (trial % 9);
        let g = random_graph(&mut rng, n, 0.5);
        if g.edge_count() == 0 {
            continue;
        }
        let a = GeneralizedAdjacency::random(&g, trial % 2 == 0, trial as u64);
        if a.matrix().is_zero() {
            continue;
        }
        let e = a.matrix().eigen().unwrap();
        // Zero trace forces a negative eigenvalue for nonzero matrices.
        assert!(
            e.lambda_min() < -1e-12 * e.lambda_max().max(1e-300),
            "λ_min {} λ_max {}",
            e.lambda_min(),
            e.lambda_max()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabel_preserves_structure(n in 2usize..12, edge_bits in any::<u64>(), perm_seed in any::<u64>()) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if edge_bits & (1 << (bit % 64)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        for i in (1..n).rev() {
            let j = rng.gen::<usize>() % (i + 1);
            perm.swap(i, j);
        }
        let relabeled = g.relabel(&perm).unwrap();
        prop_assert_eq!(relabeled.edge_count(), g.edge_count());
        let mut deg_a: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut deg_b: Vec<usize> = (0..n).map(|v| relabeled.degree(v)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        prop_assert_eq!(deg_a, deg_b);
    }

    #[test]
    fn parse_render_roundtrip(n in 1usize..14, edge_bits in any::<u128>()) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if edge_bits & (1 << (bit % 128)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let dimacs = parse_graph(&g.render_dimacs(), GraphFormat::Dimacs).unwrap();
        prop_assert_eq!(&dimacs, &g);
        let edge_list = parse_graph(&g.render_edge_list(), GraphFormat::EdgeList).unwrap();
        prop_assert_eq!(&edge_list, &g);
    }
}

// ---------------------------------------------------------------------------
// lp-simplex
// ---------------------------------------------------------------------------

#[test]
fn lp_objective_invariant_under_row_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let nv = 2 + rng.gen::<usize>() % 4;
        let m = 2 + rng.gen::<usize>() % 5;
        let mut lp = LinearProgram::new(
            Sense::Maximize,
            (0..nv).map(|_| rng.gen::<f64>() * 2.0).collect(),
        );
        for _ in 0..m {
            let coeffs: Vec<f64> = (0..nv).map(|_| rng.gen::<f64>() * 2.0).collect();
            lp.constrain(coeffs, Relation::Le, 1.0 + rng.gen::<f64>());
        }
        let base = simplex::solve_lp(&lp).unwrap();
        if base.status != LpStatus::Optimal {
            continue;
        }
        let mut shuffled = lp.clone();
        shuffled.constraints.reverse();
        if m > 2 {
            shuffled.constraints.swap(0, m / 2);
        }
        let other = simplex::solve_lp(&shuffled).unwrap();
        assert_eq!(other.status, LpStatus::Optimal);
        assert!(
            (base.objective - other.objective).abs() <= 1e-9 * (1.0 + base.objective.abs()),
            "{} vs {}",
            base.objective,
            other.objective
        );
    }
}

// ---------------------------------------------------------------------------
// exact-oracles
// ---------------------------------------------------------------------------

/// x ∈ abl(STAB(G)) (that is, α(G,x) ≤ 1) iff x ∈ QSTAB(ḡ).
#[test]
fn antiblocker_identity_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut tested = 0;
    'outer: for trial in 0..40 {
        let n = 4 + (trial % 6); // up to 9
        let g = random_graph(&mut rng, n, 0.45);
        let complement = g.complement();
        for _ in 0..5 {
            if tested >= 100 {
                break 'outer;
            }
            // Scale points to straddle the boundary.
            let raw: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            let scale = 0.2 + 1.2 * rng.gen::<f64>();
            let x: Vec<f64> = raw.iter().map(|v| v * scale / n as f64 * 4.0).collect();
            let w = WeightVector::new(x).unwrap();

            let alpha_val = exact::alpha(&g, &w).unwrap().value.finite();
            let in_abl_stab = alpha_val <= 1.0 + 1e-8;
            let in_qstab = exact::in_qstab(&complement, &w).unwrap().inside;
            assert_eq!(
                in_abl_stab, in_qstab,
                "trial {trial}: alpha {alpha_val}, qstab {in_qstab}"
            );
            tested += 1;
        }
    }
    assert!(tested >= 100);
}

#[test]
fn alpha_and_chif_are_relabel_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for trial in 0..20 {
        let n = 4 + (trial % 5);
        let g = random_graph(&mut rng, n, 0.5);
        // Dyadic weights make the permuted max-weight sums exact in f64.
        let w = WeightVector::new(
            (0..n).map(|_| (rng.gen::<u32>() % 64) as f64 / 8.0).collect(),
        )
        .unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen::<usize>() % (i + 1);
            perm.swap(i, j);
        }
        let gp = g.relabel(&perm).unwrap();
        let wp = {
            let mut v = vec![0.0; n];
            for i in 0..n {
                v[perm[i]] = w.get(i);
            }
            WeightVector::new(v).unwrap()
        };
        let a1 = exact::alpha(&g, &w).unwrap().value.finite();
        let a2 = exact::alpha(&gp, &wp).unwrap().value.finite();
        assert_eq!(a1, a2);
        let c1 = exact::chi_f(&g, &w).unwrap().value.finite();
        let c2 = exact::chi_f(&gp, &wp).unwrap().value.finite();
        assert!((c1 - c2).abs() <= 1e-8 * (1.0 + c1), "{c1} vs {c2}");
    }
}

/// χ_f by the covering LP equals max ⟨w,x⟩ over QSTAB(ḡ) (stable-set
/// inequalities of G), two independent LP routes.
#[test]
fn chif_equals_qstab_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for trial in 0..15 {
        let n = 4 + (trial % 6);
        let g = random_graph(&mut rng, n, 0.5);
        let w = WeightVector::new((0..n).map(|_| rng.gen::<f64>() * 2.0).collect()).unwrap();
        let covering = exact::chi_f(&g, &w).unwrap().value.finite();

        let family = exact::enumerate_stable_sets(&g, true).unwrap();
        let mut lp = LinearProgram::new(Sense::Maximize, w.entries().to_vec());
        for &s in family.sets() {
            lp.constrain(family.incidence_vector(s), Relation::Le, 1.0);
        }
        let packing = simplex::solve_lp(&lp).unwrap();
        assert_eq!(packing.status, LpStatus::Optimal);
        assert!(
            (covering - packing.objective).abs() <= 1e-7 * (1.0 + covering),
            "covering {covering} vs packing {}",
            packing.objective
        );
    }
}

// ---------------------------------------------------------------------------
// sdp-engine
// ---------------------------------------------------------------------------

/// Stable-set incidence vectors are primal feasible for the diagonal LMI.
#[test]
fn stable_sets_feasible_in_unit_corner() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for trial in 0..12 {
        let n = 4 + (trial % 5);
        let g = random_graph(&mut rng, n, 0.5);
        let a = GeneralizedAdjacency::random(&g, trial % 2 == 0, trial as u64 + 5);
        let b = a.tilde_form().unwrap().sqrt_i_plus().unwrap();
        let family = exact::enumerate_stable_sets(&g, true).unwrap();
        for &s in family.sets() {
            let x = family.incidence_vector(s);
            let slack = SymMatrix::identity(n).sub(&b.scaled_congruence(&x));
            let lmin = slack.eigen().unwrap().lambda_min();
            assert!(lmin >= -1e-8, "trial {trial}: λ_min {lmin}");
        }
    }
}

#[test]
fn xi_iterates_stay_in_unit_box() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let cfg = SdpConfig::default();
    for trial in 0..10 {
        let n = 4 + (trial % 5);
        let g = random_graph(&mut rng, n, 0.5);
        let a = GeneralizedAdjacency::random(&g, false, trial as u64 + 17);
        let w = WeightVector::new((0..n).map(|_| rng.gen::<f64>() * 2.0).collect()).unwrap();
        let r = bounds::xi(&a, &w, &cfg).unwrap();
        if let spectral_gauge::result::Certificate::SdpPair { x, .. } = &r.certificate {
            for &xi in x {
                assert!(xi <= 1.0 + 1e-8 && xi >= -1e-10, "x entry {xi}");
            }
        } else {
            panic!("xi returns an SDP pair");
        }
    }
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

/// Midpoint concavity of w ↦ ⟨√w, Z√w⟩ for Z = Diag(x)(I+Ã)Diag(x) with
/// nonnegative A and x.
#[test]
fn sqrt_quadratic_form_is_midpoint_concave() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for trial in 0..40 {
        let n = 3 + (trial % 6);
        let g = random_graph(&mut rng, n, 0.5);
        let a = GeneralizedAdjacency::random(&g, true, trial as u64 + 23);
        let form = a.tilde_form().unwrap();
        let x: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let z = SymMatrix::from_fn(n, |i, j| x[i] * form.i_plus.get(i, j) * x[j]);
        let f = |w: &[f64]| -> f64 {
            let sw: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();
            z.quadratic_form(&sw)
        };
        let w1: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let w2: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let mid: Vec<f64> = w1.iter().zip(&w2).map(|(a, b)| 0.5 * (a + b)).collect();
        let lhs = f(&mid);
        let rhs = 0.5 * (f(&w1) + f(&w2));
        assert!(lhs >= rhs - 1e-9 * (1.0 + rhs.abs()), "trial {trial}: {lhs} < {rhs}");
    }
}

#[test]
fn hoffman_eigen_and_sdp_routes_agree_on_randoms() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let cfg = SdpConfig::default();
    for trial in 0..10 {
        let n = 3 + (trial % 6);
        let g = random_graph(&mut rng, n, 0.5);
        let a = GeneralizedAdjacency::random(&g, false, trial as u64 + 31);
        let w = WeightVector::new((0..n).map(|_| rng.gen::<f64>() * 2.0).collect()).unwrap();
        let eig_route = bounds::hoffman(&a, &w).unwrap().value.finite();
        let sdp_route = bounds::hoffman_via_sdp(&a, &w, &cfg).unwrap().value.finite();
        assert!(
            (eig_route - sdp_route).abs() <= 1e-6 * (1.0 + eig_route),
            "{eig_route} vs {sdp_route}"
        );
    }
}

#[test]
fn perron_bound_dominates_alpha_on_connected_randoms() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let mut tested = 0;
    for trial in 0..60 {
        let n = 4 + (trial % 9); // up to 12
        let g = random_graph(&mut rng, n, 0.5);
        if !g.is_connected() || g.edge_count() == 0 {
            continue;
        }
        let bound = bounds::perron_bound(&g).unwrap().value.finite();
        let alpha = exact::alpha(&g, &WeightVector::uniform(n)).unwrap().value.finite();
        assert!(bound >= alpha - 1e-6, "trial {trial}: perron {bound} < alpha {alpha}");
        tested += 1;
    }
    assert!(tested >= 20);
}

// ---------------------------------------------------------------------------
// gauge-lab
// ---------------------------------------------------------------------------

/// Every returned polar maximizer is feasible and attains the lower bound;
/// the Cauchy inequality holds against the evaluated polar.
#[test]
fn polar_brackets_and_cauchy_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let pcfg = PolarConfig::default();
    for trial in 0..8 {
        let n = 4 + (trial % 4);
        let g = random_graph(&mut rng, n, 0.5);
        let a = g.adjacency_matrix();
        let oracle = GaugeOracle::hoffman(&a).unwrap();
        let z: Vec<f64> = (0..n).map(|_| 0.1 + rng.gen::<f64>()).collect();
        let eval = gauge::polar(&oracle, &z, &pcfg).unwrap();
        assert!(eval.converged);
        assert!(eval.lower <= eval.upper + 1e-12);
        let k_star = oracle.value(&eval.maximizer).unwrap();
        assert!(k_star <= 1.0 + 1e-6, "κ(w*) = {k_star}");
        let pairing: f64 = eval.maximizer.iter().zip(&z).map(|(a, b)| a * b).sum();
        assert!((pairing - eval.lower).abs() <= 1e-9 * (1.0 + eval.lower));

        // ⟨w,z⟩ ≤ κ(w)·κ°(z)·(1 + tol) on random w.
        for _ in 0..5 {
            let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
            let kw = oracle.value(&w).unwrap();
            let wz: f64 = w.iter().zip(&z).map(|(a, b)| a * b).sum();
            assert!(
                wz <= kw * eval.upper * (1.0 + 1e-6) + 1e-9,
                "pairing {wz} > {kw} * {}",
                eval.upper
            );
        }
    }
}

/// θ(G,w) lower-bounds Ξ(A,w) for every A, and θ⁺(G,w) lower-bounds it
/// for nonnegative A.
#[test]
fn theta_variants_below_sampled_xi() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    let cfg = SdpConfig::default();
    for trial in 0..8 {
        let n = 4 + (trial % 5);
        let g = random_graph(&mut rng, n, 0.5);
        let w = WeightVector::new((0..n).map(|_| 0.2 + rng.gen::<f64>()).collect()).unwrap();
        let theta = {
            let p = spectral_gauge::sdp::ThetaBodyProblem::new(
                g.clone(),
                w.clone(),
                spectral_gauge::sdp::ThetaVariant::Theta,
            )
            .unwrap();
            spectral_gauge::sdp::solve_theta_body(&p, &cfg).unwrap().primal_objective
        };
        let theta_plus = {
            let p = spectral_gauge::sdp::ThetaBodyProblem::new(
                g.clone(),
                w.clone(),
                spectral_gauge::sdp::ThetaVariant::ThetaPlus,
            )
            .unwrap();
            spectral_gauge::sdp::solve_theta_body(&p, &cfg).unwrap().primal_objective
        };
        for sample in 0..4u64 {
            let signed = GeneralizedAdjacency::random(&g, false, trial as u64 * 100 + sample);
            let xi_signed = bounds::xi(&signed, &w, &cfg).unwrap().value.finite();
            assert!(theta <= xi_signed + 1e-6, "theta {theta} > xi {xi_signed}");

            let nonneg = GeneralizedAdjacency::random(&g, true, trial as u64 * 100 + sample);
            let xi_nonneg = bounds::xi(&nonneg, &w, &cfg).unwrap().value.finite();
            assert!(theta_plus <= xi_nonneg + 1e-6, "theta+ {theta_plus} > xi {xi_nonneg}");
        }
    }
}

/// ⟨w,z⟩ ≤ H(A,w)·Ξ(A,z): the Cauchy-style pairing between a gauge and
/// its polar.
#[test]
fn cauchy_pairing_between_hoffman_and_xi() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let cfg = SdpConfig::default();
    for trial in 0..12 {
        let n = 3 + (trial % 6);
        let g = random_graph(&mut rng, n, 0.5);
        let a = GeneralizedAdjacency::random(&g, trial % 2 == 0, trial as u64 + 41);
        let w = WeightVector::new((0..n).map(|_| rng.gen::<f64>() * 2.0).collect()).unwrap();
        let z = WeightVector::new((0..n).map(|_| rng.gen::<f64>() * 2.0).collect()).unwrap();
        let h = bounds::hoffman(&a, &w).unwrap().value.finite();
        let xi = bounds::xi(&a, &z, &cfg).unwrap().value.finite();
        let pairing: f64 = w.entries().iter().zip(z.entries()).map(|(x, y)| x * y).sum();
        assert!(
            pairing <= h * xi + 1e-6 * (1.0 + pairing),
            "trial {trial}: <w,z> = {pairing} > H·Xi = {}",
            h * xi
        );
    }
}

/// Gauge axioms hold within solver noise for the bound oracles.
#[test]
fn gauge_axioms_for_bound_oracles() {
    let c5 = GraphFamily::Cycle(5).build().unwrap();
    let a = c5.adjacency_matrix();
    let cfg = SdpConfig::default();

    let hoffman = GaugeOracle::hoffman(&a).unwrap();
    assert!(gauge::check_gauge_axioms(&hoffman, 30, 5).unwrap().max_violation() <= 1e-9);

    let alpha = GaugeOracle::alpha(&c5);
    assert!(gauge::check_gauge_axioms(&alpha, 30, 5).unwrap().max_violation() <= 1e-12);

    let chif = GaugeOracle::chi_f(&c5);
    assert!(gauge::check_gauge_axioms(&chif, 30, 5).unwrap().max_violation() <= 1e-9);

    let xi = GaugeOracle::xi(&a, cfg);
    assert!(gauge::check_gauge_axioms(&xi, 15, 5).unwrap().max_violation() <= 1e-6);
}
