//! One function per subcommand, each returning a report.

use tate_mirror::exactnum::{QSeries, Ring};
use tate_mirror::fukaya::{dehn_table_entries, floer_product, mirror_map, relation_kernel, RELATION_MONOMIALS};
use tate_mirror::graded::{graded_basis, Homogeneous};
use tate_mirror::hochschild::{
    cusp_degree_data, cusp_graded_ranks, koszul_h1_dim, omega_pairing, predicted_cusp_table, tjurina_dim,
    PlaneCurveRing, DEFAULT_BOUND,
};
use tate_mirror::lattice::{count_perturbed, row_formula_count};
use tate_mirror::rational::int;
use tate_mirror::theta::{j_window, lambda_exp, Theta};
use tate_mirror::weierstrass::{
    bracket_table, isomorphism, lie_d_matrix, reparam_apply, tate_coeffs, WeierstrassCoeffs,
};
use tate_mirror::Result;

use crate::report::{curve, element, series, Check, VerificationReport};

pub const DEFAULT_ORDER: usize = 8;
pub const DEFAULT_MAX_DEGREE: u32 = 12;
pub const DEFAULT_CHARACTERISTICS: [u64; 4] = [0, 2, 3, 5];
pub const DEFAULT_WINDOW: (u32, i64) = (8, -12);

fn degree_pairs(max_degree: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..max_degree.max(1)).flat_map(move |n1| (1..=max_degree - n1).map(move |n2| (n1, n2)))
}

/// Perturbed lattice points against `λ`, by brute force and by rows, for
/// every triangle with `n₁ + n₂ ≤ max_degree` and `λ ≤ max_exponent`.
pub fn verify_lattice(max_degree: u32, max_exponent: u32) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("verify-lattice").param("max_degree", max_degree).param("max_exponent", max_exponent);
    for (n1, n2) in degree_pairs(max_degree) {
        let (mut lambdas, mut brute, mut rows) = (Vec::new(), Vec::new(), Vec::new());
        for a in graded_basis(n1)? {
            for b in graded_basis(n2)? {
                let (p1, p2) = (a.value(), b.value());
                let (lo, hi) = j_window(n1, p1, n2, p2, max_exponent as usize + 1);
                for j in lo..=hi {
                    let p2j = p2 + int(j);
                    let l = lambda_exp(n1, p1, n2, p2j);
                    if l > int(max_exponent as i128) {
                        continue;
                    }
                    lambdas.push(l.to_string());
                    brute.push(count_perturbed(n1, p1, n2, p2j)?.to_string());
                    rows.push(row_formula_count(n1, p1, n2, p2j)?.to_string());
                }
            }
        }
        let id = format!("n1={n1},n2={n2}");
        report.push(Check::compare(format!("{id}/count"), "perturbed lattice points = λ", lambdas.clone(), brute));
        report.push(Check::compare(format!("{id}/rows"), "row-by-row count = λ", lambdas, rows));
    }
    Ok(report)
}

/// Floer products against theta products on every pair of basis elements.
pub fn verify_theta(order: usize, max_degree: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("verify-theta").param("order", order).param("max_degree", max_degree);
    for (n1, n2) in degree_pairs(max_degree) {
        for a in graded_basis(n1)? {
            for b in graded_basis(n2)? {
                let theta = Homogeneous::<Theta>::basis_product(a, b, order)?;
                let floer = floer_product(n1, a.value(), n2, b.value(), order)?;
                report.push(Check::compare(
                    format!("x[{n1},{a}]*x[{n2},{b}]"),
                    "floer product = theta product",
                    element(&theta),
                    element(&floer),
                ));
            }
        }
    }
    Ok(report)
}

fn tate_curve(order: usize) -> Result<WeierstrassCoeffs<QSeries>> {
    let (a4, a6) = tate_coeffs(order)?;
    let z = Ring::Integers;
    WeierstrassCoeffs::new(QSeries::one(z, order), QSeries::zero(z, order), QSeries::zero(z, order), a4, a6)
}

/// The Weierstrass equation read off the degree-6 relation, normalized and
/// compared with the Tate curve.
pub fn mirror(order: usize, emit_relation: bool) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("mirror-map").param("order", order);
    let m = mirror_map(order)?;
    let tate = tate_curve(order)?;
    report.push(Check::value("relation/kernel-dim", "one relation in degree 6", 1, m.relation.kernel_dim_q0));
    report.push(Check::value("relation/integral", "relation over Z", true, m.relation.integral));
    report.push(Check::value("relation/residual", "relation holds mod q^K", true, m.relation.residual_zero));
    report.push(Check::compare("tate-curve", "normalized mirror = Tate curve", curve(&tate), curve(&m.normalized)));
    let iso = isomorphism(&m.raw, &tate)?;
    let mapped = match &iso {
        Some(g) => curve(&reparam_apply(g, &m.raw)?),
        None => Vec::new(),
    };
    report.push(Check::compare("isomorphic-to-tate", "mirror ≅ Tate over Z[[q]]", curve(&tate), mapped));

    let labels = ["a1", "a2", "a3", "a4", "a6"];
    for (l, c) in labels.iter().zip(m.normalized.iter()) {
        report.data.insert(format!("normalized/{l}"), series(c));
    }
    for (l, c) in labels.iter().zip(m.raw.iter()) {
        report.data.insert(format!("raw/{l}"), series(c));
    }
    let g = &m.normalization;
    for (l, c) in [("u", &g.u), ("s", &g.s), ("r", &g.r), ("t", &g.t)] {
        report.data.insert(format!("normalization/{l}"), series(c));
    }
    if let Some(g) = iso {
        report.data.insert("isomorphism/u".to_string(), series(&g.u));
    }
    if emit_relation {
        for (name, c) in RELATION_MONOMIALS.iter().zip(&m.relation.coeffs) {
            report.data.insert(format!("relation/{name}"), series(c));
        }
        report.data.insert("relation/f".to_string(), series(&m.f));
    }
    Ok(report)
}

/// The seven products at `q = 0` and the relation among the degree-6
/// monomials.
pub fn dehn_table() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("dehn-table");
    for e in dehn_table_entries()? {
        report.push(Check::compare(e.name, "Dehn-twist product at q=0", element(&e.expected), element(&e.actual)));
    }
    let r = relation_kernel(1)?;
    let got: Vec<String> = r.integer_coeffs()?.iter().map(|c| c.coeff(0).to_string()).collect();
    let want = ["1", "1", "-1", "0", "0", "0", "0"].map(String::from).to_vec();
    report.push(Check::compare("y'^2 + x'^3 = x'y'z'", "degree-6 relation at q=0", want, got));
    Ok(report)
}

fn expected_tjurina(characteristic: u64) -> Result<usize> {
    Ok(cusp_degree_data(characteristic)?.0.len())
}

/// Hochschild tables of the cusp and the dimension checks for the node in
/// one characteristic.
pub fn hochschild(characteristic: u64, n_max: u32, s_min: i64) -> Result<VerificationReport> {
    let field = Ring::field_of_characteristic(characteristic)?;
    let mut report = VerificationReport::new(&format!("hochschild-char{characteristic}"))
        .param("characteristic", characteristic)
        .param("n_max", n_max)
        .param("s_min", s_min)
        .param("bound", DEFAULT_BOUND);

    let got = cusp_graded_ranks(field, n_max, s_min)?;
    let want = predicted_cusp_table(characteristic, n_max, s_min)?;
    for n in 2..=n_max {
        let row = |t: &tate_mirror::hochschild::GradedRankTable| -> Vec<String> {
            (s_min..=0).map(|s| t.get(n, s).unwrap_or(0).to_string()).collect()
        };
        report.push(Check::compare(format!("cusp/HH^{n}"), "HH^n by internal degree s_min..0", row(&want), row(&got)));
    }

    let cusp = PlaneCurveRing::cusp(field)?;
    let t = tjurina_dim(&cusp, DEFAULT_BOUND)?;
    let h = koszul_h1_dim(&cusp, DEFAULT_BOUND)?;
    report.push(Check::value("cusp/tjurina", "dim R/(f_x, f_y)", expected_tjurina(characteristic)?, t.dimension));
    report.push(Check::value("cusp/koszul", "dim M/N = dim T", t.dimension, h.dimension));
    report.push(Check::value("cusp/omega", "skew pairing vanishes", true, omega_pairing(&cusp, &h.generators, DEFAULT_BOUND).is_ok()));
    if n_max >= 2 {
        let coker = lie_d_matrix(field)?.coker_rank;
        report.push(Check::value("cusp/HH^2-total", "HH^2 rank = rank coker d", coker, got.row_total(2)));
    }

    let node = PlaneCurveRing::node(field)?;
    let tn = tjurina_dim(&node, DEFAULT_BOUND)?;
    let hn = koszul_h1_dim(&node, DEFAULT_BOUND)?;
    report.push(Check::value("node/tjurina", "dim R/(f_x, f_y)", 1, tn.dimension));
    report.push(Check::value("node/koszul", "dim M/N", 1, hn.dimension));
    report.push(Check::value("node/omega", "skew pairing vanishes", true, omega_pairing(&node, &hn.generators, DEFAULT_BOUND).is_ok()));
    report.data.insert("cusp/tjurina-basis".to_string(), t.basis.iter().map(|(a, b)| format!("x^{a}y^{b}")).collect());
    Ok(report)
}

/// The adjoint action of `ker d` on `coker d`, with the global sign that
/// relates it to the reference table.
pub fn lie_brackets(characteristic: u64) -> Result<VerificationReport> {
    let field = Ring::field_of_characteristic(characteristic)?;
    let d = lie_d_matrix(field)?;
    let table = bracket_table(characteristic)?;
    let sign = table.sign.unwrap_or(1);
    let mut report = VerificationReport::new(&format!("lie-brackets-char{characteristic}"))
        .param("characteristic", characteristic)
        .param("sign", table.sign.map_or("none".to_string(), |s| format!("{s:+}")));
    let (want_coker, want_ker) = match characteristic {
        0 => (2, 1),
        2 => (4, 3),
        3 => (3, 2),
        _ => (2, 1),
    };
    report.push(Check::value("d/coker-rank", "rank coker d", want_coker, d.coker_rank));
    report.push(Check::value("d/ker-rank", "rank ker d", want_ker, d.ker_rank));
    report.push(Check::value("global-sign", "one sign for the whole table", true, table.sign.is_some()));
    let k = tate_mirror::exactnum::Scalar::from_i64(field, sign);
    for e in &table.entries {
        let expected: Vec<String> = e.reference.iter().map(|c| (c * &k).to_string()).collect();
        let actual: Vec<String> = e.computed.iter().map(ToString::to_string).collect();
        report.push(Check::compare(format!("[{}, {}]", e.generator, e.class), "adjoint bracket", expected, actual));
    }
    for e in &table.entries {
        report.data.entry(format!("generator/{}", e.generator)).or_insert_with(|| vec![e.xi.to_string()]);
    }
    Ok(report)
}

/// Every suite with default parameters.
pub fn all(order: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("all").param("order", order);
    report.absorb(verify_lattice(DEFAULT_MAX_DEGREE, DEFAULT_MAX_DEGREE)?);
    report.absorb(verify_theta(order, DEFAULT_MAX_DEGREE)?);
    report.absorb(dehn_table()?);
    report.absorb(mirror(order, false)?);
    for c in DEFAULT_CHARACTERISTICS {
        report.absorb(hochschild(c, DEFAULT_WINDOW.0, DEFAULT_WINDOW.1)?);
    }
    for c in [0, 2, 3] {
        report.absorb(lie_brackets(c)?);
    }
    Ok(report)
}
