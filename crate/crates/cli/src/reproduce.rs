//! Regression table of published values, recomputed from scratch.

use serde::Serialize;
use tcshuffle::cohomology::{
    cup_length, moore_presentation, tensor_square_ring, truncated_polynomial_mod2, two_cell_presentation, weighted_tc_lower_bound, RingElement,
    TensorSquare, WeightedClass,
};
use tcshuffle::graded::{diagonal_primitive, BasisSymbol, Coefficients};
use tcshuffle::hopf_shuffle::{bottom_degree, chi_bar_compose, degree_split, delta_rho_oracle, join_vanishes, phi_homology, PhiInput};
use tcshuffle::prism::{decompose_prism, is_relative_cycle};
use tcshuffle::shuffles::{enumerate_shuffles, Shuffle};
use tcshuffle::tc_rules::{classify, ganea_product_bounds, Justification, MetastableFacts, TcVerdict, TwoCellInput};

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub area: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<Row>,
}

struct Table(Vec<Row>);

impl Table {
    fn row(&mut self, area: &'static str, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        self.0.push(Row { area, name: name.into(), expected, actual, ok });
    }
}

fn interval(v: &Result<TcVerdict, impl ToString>) -> String {
    match v {
        Ok(v) => match v.exact {
            Some(t) => format!("exact {t}"),
            None => format!("[{}, {}]", v.lower, v.upper),
        },
        Err(e) => format!("error: {}", e.to_string()),
    }
}

fn meta(h0_nonzero: bool) -> MetastableFacts {
    MetastableFacts { h0_nonzero, ..Default::default() }
}

fn shuffles(t: &mut Table) {
    let fig = Shuffle::new(5, 3, vec![1, 2, 4, 6, 7]).expect("valid shuffle");
    t.row("shuffles", "(5,3) shuffles include (1 2 4 6 7 || 3 5 8)", true, enumerate_shuffles(5, 3).contains(&fig));
    let path: Vec<String> = fig.edgepath().vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
    t.row("shuffles", "edge path of (1 2 4 6 7 || 3 5 8)", "(0,0) (1,0) (2,0) (2,1) (3,1) (3,2) (4,2) (5,2) (5,3)", path.join(" "));
    let sig = fig.signature();
    t.row("shuffles", "area and sign of (1 2 4 6 7 || 3 5 8)", "5, -1", format!("{}, {}", sig.area, sig.sign));
    let seq = fig.sequences();
    t.row("shuffles", "α and β of (1 2 4 6 7 || 3 5 8)", "[1, 1, 2, 2, 1, 2] [3, 2, 3, 1]", format!("{:?} {:?}", seq.alpha, seq.beta));
    for k in 0..=4 {
        let alpha = Shuffle::identity(0, k).sequences().alpha;
        t.row("shuffles", format!("α of the (0,{k}) shuffle"), format!("[{}]", k + 1), format!("{alpha:?}"));
        let beta = Shuffle::identity(k, 0).sequences().beta;
        t.row("shuffles", format!("β of the ({k},0) shuffle"), format!("[{}]", k + 1), format!("{beta:?}"));
    }
}

fn prism_and_graded(t: &mut Table) {
    t.row("prism", "boundary of the (1,1) prism lies in the prism boundary", true, is_relative_cycle(&decompose_prism(1, 1)));
    let x = BasisSymbol::new("x", 3);
    t.row("graded", "Δ_1 x", "1·x", diagonal_primitive(&x, 1, Coefficients::INTEGERS));
    t.row("graded", "Δ_2 x", "1·1⊗x + 1·x⊗1", diagonal_primitive(&x, 2, Coefficients::INTEGERS));
}

/// `±1·t` terms rendered in the canonical order of tensor output.
fn signed_sum(mut terms: Vec<(&str, &str)>) -> String {
    terms.sort();
    terms
        .iter()
        .enumerate()
        .map(|(i, (f, s))| match (i, *s) {
            (0, "+") => format!("1·{f}"),
            (0, _) => format!("-1·{f}"),
            (_, s) => format!(" {s} 1·{f}"),
        })
        .collect()
}

fn phi(t: &mut Table) {
    for (dx, dy) in [(1u32, 1u32), (2, 2), (1, 2)] {
        let s = if dx * dy % 2 == 1 { "+" } else { "-" };
        let want = signed_sum(vec![("(x1⊗1)⊗(1⊗y2)", "+"), ("(1⊗y2)⊗(x1⊗1)", s)]);
        let input = PhiInput::new(0, 0, vec![dx], vec![dy], Coefficients::INTEGERS).expect("valid");
        t.row("hopf_shuffle", format!("Φ_(0,0) on x⊗y, |x|={dx}, |y|={dy}"), &want, phi_homology(&input));
        t.row("hopf_shuffle", format!("δρ formula for Φ_(0,0), |x|={dx}, |y|={dy}"), &want, delta_rho_oracle(&input));
    }
    for (d1, d2, dy) in [(1u32, 1u32, 1u32), (2, 1, 1), (1, 2, 2), (2, 2, 2)] {
        let s2 = if d2 * dy % 2 == 1 { "+" } else { "-" };
        let s3 = if (d1 + d2) * dy % 2 == 1 { "-" } else { "+" };
        let input = PhiInput::new(1, 0, vec![d1, d2], vec![dy], Coefficients::INTEGERS).expect("valid");
        let text = signed_sum(vec![
            ("(x1⊗1)⊗(x2⊗1)⊗(1⊗y3)", "+"),
            ("(x1⊗1)⊗(1⊗y3)⊗(x2⊗1)", s2),
            ("(1⊗y3)⊗(x1⊗1)⊗(x2⊗1)", s3),
        ]);
        t.row("hopf_shuffle", format!("Φ_(1,0), degrees ({d1},{d2};{dy})"), &text, phi_homology(&input));
    }
    for p in 2..=9u32 {
        let sign: i64 = if p % 2 == 0 { 1 } else { -1 };
        for ((n, m), d) in [((0, 0), 1 + sign), ((1, 0), 2 + sign), ((1, 1), 4 + 2 * sign)] {
            t.row("hopf_shuffle", format!("bottom degree ({n},{m}) on S^{p}"), d, bottom_degree(n, m, p));
            let chi = chi_bar_compose(&phi_homology(&PhiInput::sphere(n, m, p).expect("valid")), p).map(|c| c.magnitude().to_string());
            t.row("hopf_shuffle", format!("|χ̄ ∘ Φ_({n},{m})| on S^{p}"), d, chi.unwrap_or_else(|e| e.to_string()));
        }
    }
    let s = degree_split(1, 1, 4);
    t.row("hopf_shuffle", "(2,2) shuffles by sign", "4 even, 2 odd", format!("{} even, {} odd", s.s_plus, s.s_minus));
    t.row("hopf_shuffle", "order-2 map joined with degree ±2", "true true", format!("{} {}", join_vanishes(2, 2), join_vanishes(2, -2)));
}

fn cohomology(t: &mut Table) {
    let r = two_cell_presentation(2, 3).into_shared();
    let u = RingElement::generator(&r, "u").expect("generator");
    t.row("cohomology", "u·u with u² = h·v, h = 3", "3·v", u.cup(&u).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string()));
    t.row("cohomology", "generators of the Moore ring squared", 4, tensor_square_ring(&moore_presentation(3)).generators().len());
    let sq = tensor_square_ring(&truncated_polynomial_mod2(3));
    let shape: Vec<String> = sq.generators().iter().map(|g| format!("{}^{}", g.name, g.truncation.unwrap_or(0))).collect();
    t.row("cohomology", "ℤ/2[u]/(u³) squared", "u_L^3 u_R^3", shape.join(" "));
    for k in [3u64, 4, 5, 12] {
        let sq = TensorSquare::new(&moore_presentation(k).into_shared());
        // -2 reduced into 0..k
        let want = match k - 2 {
            1 => "y_L·y_R".to_string(),
            c => format!("{c}·y_L·y_R"),
        };
        t.row("cohomology", format!("ȳ² over ℤ/{k}"), want, sq.zero_divisor_power("y", 2).expect("power"));
    }
    for (p, h) in [(2u32, 1i64), (4, 2), (8, 1)] {
        let sq = TensorSquare::new(&two_cell_presentation(p, h).into_shared());
        t.row("cohomology", format!("ū⁴ for |u| = {p}, h = {h}"), format!("{}·v_L·v_R", 6 * h * h), sq.zero_divisor_power("u", 4).expect("power"));
    }
    let t3 = TensorSquare::new(&truncated_polynomial_mod2(3).into_shared());
    t.row("cohomology", "cup length of ℤ/2[u]/(u³), |u| = 3, squared", 4, cup_length(t3.square()).expect("truncated"));
    let moore = TensorSquare::new(&moore_presentation(3).into_shared());
    let ybar = moore.zero_divisor("y").expect("generator");
    let classes = vec![WeightedClass::new(ybar.clone(), 2).expect("weight"), WeightedClass::new(ybar, 2).expect("weight")];
    t.row("cohomology", "weighted bound from ȳ, ȳ of weight 2 (ℤ/3)", 4, weighted_tc_lower_bound(&classes).expect("bound"));
    let hopf = TensorSquare::new(&two_cell_presentation(2, 1).into_shared());
    let ubar = hopf.zero_divisor("u").expect("generator");
    let classes: Vec<_> = (0..4).map(|_| WeightedClass::new(ubar.clone(), 1).expect("weight")).collect();
    t.row("cohomology", "zero-divisor bound from four copies of ū", 4, weighted_tc_lower_bound(&classes).expect("bound"));
}

fn tc(t: &mut Table) {
    for (d, want) in [(0i64, "exact 2"), (1, "exact 0"), (-1, "exact 0"), (2, "exact 3"), (-2, "exact 3"), (5, "exact 4")] {
        t.row("tc_rules", format!("S^1 ∪_α e^2, deg α = {d}"), want, interval(&classify(&TwoCellInput::degree(1, d))));
    }
    for (p, d) in [(3u32, 3i64), (4, -2)] {
        t.row("tc_rules", format!("S^{p} ∪_α e^{}, deg α = {d}", p + 1), "exact 2", interval(&classify(&TwoCellInput::degree(p, d))));
    }
    for (p, h, want) in [(2u32, 1i64, "exact 4"), (2, 0, "exact 2"), (4, 2, "exact 4")] {
        t.row("tc_rules", format!("S^{p} ∪ e^{}, Hopf invariant {h}", 2 * p), want, interval(&classify(&TwoCellInput::classical_hopf(p, h))));
    }
    let bm = MetastableFacts { two_h0_join_h0_zero: Some(true), ..meta(true) };
    t.row("tc_rules", "S^3 ∪ e^7 along the Blakers–Massey element", "exact 3", interval(&classify(&TwoCellInput::metastable(3, 6, bm))));
    for delta in 0..=1u32 {
        for p in 3 + delta..=6 {
            let f = MetastableFacts { h0_order: Some(2), ..meta(true) };
            let q = 2 * p + delta;
            t.row("tc_rules", format!("S^{p} ∪ e^{}, H₀(α) of order 2", q + 1), "exact 3", interval(&classify(&TwoCellInput::metastable(p, q, f))));
            t.row("tc_rules", format!("S^{p} ∪ e^{}, H₀(α) = 0", q + 1), "exact 2", interval(&classify(&TwoCellInput::metastable(p, q, meta(false)))));
        }
    }
    for (p, q) in [(5u32, 10u32), (7, 14), (7, 18), (9, 24)] {
        t.row("tc_rules", format!("S^{p} ∪ e^{}, H₀(α) ≠ 0 (p odd, q even)", q + 1), "exact 3", interval(&classify(&TwoCellInput::metastable(p, q, meta(true)))));
    }
    let gap = MetastableFacts { h_equals_h0: true, two_h0_join_h0_zero: Some(true), ..meta(true) };
    t.row("tc_rules", "S^2 ∪ e^5 along η∘Ση", "[2, 3]", interval(&classify(&TwoCellInput::metastable(2, 4, gap))));
    let iwase = MetastableFacts { h_equals_h0: true, h0_order: Some(3), ..meta(true) };
    t.row("tc_rules", "S^2 ∪ e^10 along η∘β, β of order 3", "[2, 3]", interval(&classify(&TwoCellInput::metastable(2, 9, iwase))));

    let y = TensorSquare::new(&truncated_polynomial_mod2(3).into_shared());
    let lower = cup_length(y.square()).expect("truncated");
    let x = TcVerdict::from_bounds(
        lower,
        4,
        vec![Justification {
            rule: "cup-length".into(),
            citation: "cat(Y × Y) ≤ TC(Y ∨ Y) ≤ 2·dim/(connectivity + 1)".into(),
            lower,
            upper: 4,
            trace: vec!["Y = ℝP⁶/ℝP² is 2-connected and 6-dimensional".into()],
        }],
    );
    t.row("tc_rules", "TC(Y ∨ Y), Y = ℝP⁶/ℝP²", "exact 4", interval(&x));
    if let Ok(x) = x {
        for k in [2u32, 4, 6] {
            let b = ganea_product_bounds(&x, k, Some(2));
            let got = b.map(|b| format!("≤ {}, additivity fails: {}", b.upper, b.additivity_fails)).unwrap_or_else(|e| e.to_string());
            t.row("tc_rules", format!("TC((Y ∨ Y) × S^{k})"), "≤ 5, additivity fails: true", got);
        }
    }
    let split = serde_json::to_string(&degree_split(1, 1, 4)).expect("serializable");
    t.row("cli", "degree 1 1 4", r#"{"degree":6,"s_plus":4,"s_minus":2}"#, split);
    let rp2 = classify(&TwoCellInput::degree(1, 2)).map(|v| format!("{:?} {}", v.exact, v.justifications[0].rule));
    t.row("cli", "tc on S^1 ∪_2 e^2", "Some(3) grados", rp2.unwrap_or_else(|e| e.to_string()));
}

pub fn run() -> Report {
    let mut t = Table(Vec::new());
    shuffles(&mut t);
    prism_and_graded(&mut t);
    phi(&mut t);
    cohomology(&mut t);
    tc(&mut t);
    let failed = t.0.iter().filter(|r| !r.ok).count();
    Report { passed: t.0.len() - failed, failed, rows: t.0 }
}
