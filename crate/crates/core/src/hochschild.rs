//! Hochschild cohomology of the affine cubics `f = y² + c·xy − x³`
//! (`c = 0` cusp, `c = 1` node) through the Koszul model
//! `D = R ⊗ K[β, x*, y*]` with `d x* = f_x β`, `d y* = f_y β`.
//!
//! Elements of `R = K[x,y]/(f)` are kept in the normal form spanned by
//! `x^a` and `x^a y`. Quotients such as the Tjurina algebra are computed by
//! linear algebra on a weight-truncated part of `R`, where `x` has weight 2
//! and `y` weight 3; every truncated dimension is recomputed with a larger
//! bound and must not change.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{usage, verification, Error, Result};
use crate::exactnum::{Echelon, Matrix, Ring, Scalar};

/// `x^a y^b` as `(a, b)`.
pub type Monomial = (u32, u32);

/// Default weight bound for the truncated eliminations.
pub const DEFAULT_BOUND: u32 = 10;

/// `2a + 3b`.
pub fn weight((a, b): Monomial) -> u32 {
    2 * a + 3 * b
}

/// A polynomial in `x, y` over a field, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: Ring) -> Poly {
        Poly { field, terms: BTreeMap::new() }
    }

    /// `Σ c·x^a y^b` from `(c, a, b)` triples.
    pub fn from_terms(field: Ring, terms: &[(i64, u32, u32)]) -> Poly {
        let mut p = Poly::zero(field);
        for &(c, a, b) in terms {
            p.add_term((a, b), Scalar::from_i64(field, c));
        }
        p
    }

    pub fn monomial(field: Ring, m: Monomial) -> Poly {
        Poly::from_terms(field, &[(1, m.0, m.1)])
    }

    pub fn field(&self) -> Ring {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        let v = &self.coeff(m) + &c;
        if v.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.field);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Scalar::from_i64(self.field, -1)))
    }

    /// The product in `K[x,y]`, without reduction.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// The largest weight of a term, `None` for zero.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|&m| weight(m)).max()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest weight first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (std::cmp::Reverse(weight(**m)), std::cmp::Reverse(m.0)));
        for (i, ((a, b), c)) in terms.into_iter().enumerate() {
            let mono = match (a, b) {
                (0, 0) => String::new(),
                _ => {
                    let v = |name: &str, e: u32| match e {
                        0 => String::new(),
                        1 => name.to_string(),
                        _ => format!("{name}^{e}"),
                    };
                    format!("{}{}", v("x", *a), v("y", *b))
                }
            };
            let text = c.to_string();
            let (neg, abs) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

/// `R = K[x,y]/(y² + c·xy − x³)` for `c ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneCurveRing {
    field: Ring,
    c: u8,
}

impl PlaneCurveRing {
    pub fn new(field: Ring, c: u8) -> Result<PlaneCurveRing> {
        if !field.is_field() {
            return Err(usage(format!("{field} is not a field")));
        }
        if c > 1 {
            return Err(usage("the curve parameter must be 0 (cusp) or 1 (node)"));
        }
        Ok(PlaneCurveRing { field, c })
    }

    pub fn cusp(field: Ring) -> Result<PlaneCurveRing> {
        PlaneCurveRing::new(field, 0)
    }

    pub fn node(field: Ring) -> Result<PlaneCurveRing> {
        PlaneCurveRing::new(field, 1)
    }

    pub fn field(&self) -> Ring {
        self.field
    }

    pub fn is_cusp(&self) -> bool {
        self.c == 0
    }

    fn c(&self) -> i64 {
        self.c as i64
    }

    pub fn f(&self) -> Poly {
        Poly::from_terms(self.field, &[(1, 0, 2), (self.c(), 1, 1), (-1, 3, 0)])
    }

    /// `c·y − 3x²`.
    pub fn f_x(&self) -> Poly {
        Poly::from_terms(self.field, &[(self.c(), 0, 1), (-3, 2, 0)])
    }

    /// `2y + c·x`.
    pub fn f_y(&self) -> Poly {
        Poly::from_terms(self.field, &[(2, 0, 1), (self.c(), 1, 0)])
    }

    /// Rewrites `y² → x³ − c·xy` until every term has `y`-degree at most 1.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        if p.field != self.field {
            return Err(Error::RingMismatch(p.field, self.field));
        }
        let mut out = Poly::zero(self.field);
        let mut todo: Vec<(Monomial, Scalar)> = p.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        while let Some(((a, b), coeff)) = todo.pop() {
            if b <= 1 {
                out.add_term((a, b), coeff);
                continue;
            }
            todo.push(((a + 3, b - 2), coeff.clone()));
            if self.c != 0 {
                todo.push(((a + 1, b - 1), -&coeff));
            }
        }
        Ok(out)
    }

    /// The product in `R`, in normal form.
    pub fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.normal_form(&a.mul(b))
    }

    /// Normal-form monomials of weight at most `w`, highest weight first.
    pub fn monomials_up_to(&self, w: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..=w / 2)
            .flat_map(|a| [(a, 0), (a, 1)])
            .filter(|&m| weight(m) <= w)
            .collect();
        out.sort_by_key(|&m| std::cmp::Reverse((weight(m), m.1)));
        out
    }

    /// Normal-form monomials of weight exactly `w`.
    pub fn monomials_of_weight(&self, w: i64) -> Vec<Monomial> {
        if w < 0 {
            return Vec::new();
        }
        let w = w as u32;
        self.monomials_up_to(w).into_iter().filter(|&m| weight(m) == w).collect()
    }
}

/// Coordinates on a finite list of labels, ordered so that elimination
/// prefers the earliest columns as pivots.
struct Columns<L> {
    labels: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Copy + Eq + std::hash::Hash> Columns<L> {
    fn new(labels: Vec<L>) -> Columns<L> {
        let index = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        Columns { labels, index }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn vector(&self, field: Ring, entries: impl IntoIterator<Item = (L, Scalar)>) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(field); self.len()];
        for (l, c) in entries {
            let i = *self.index.get(&l).ok_or_else(|| verification("truncation", "term outside the column range"))?;
            v[i] = &v[i] + &c;
        }
        Ok(v)
    }
}

/// The span of `m·g` for generators `g` and monomials `m` of weight at most
/// `bound`, echelonized with high-weight columns first.
struct IdealSpan {
    columns: Columns<Monomial>,
    echelon: Echelon,
}

impl IdealSpan {
    fn new(ring: &PlaneCurveRing, gens: &[Poly], bound: u32) -> Result<IdealSpan> {
        let mut rows = Vec::new();
        let mut top = 0;
        for g in gens {
            for m in ring.monomials_up_to(bound) {
                let p = ring.mul(&Poly::monomial(ring.field, m), g)?;
                top = top.max(p.max_weight().unwrap_or(0));
                rows.push(p);
            }
        }
        let columns = Columns::new(ring.monomials_up_to(top));
        let data = rows
            .iter()
            .map(|p| columns.vector(ring.field, p.terms.iter().map(|(m, c)| (*m, c.clone()))))
            .collect::<Result<Vec<_>>>()?;
        let echelon = Matrix::from_rows(ring.field, columns.len(), data)?.echelon();
        Ok(IdealSpan { columns, echelon })
    }

    /// Monomials of weight at most `w` that are not leading terms of the
    /// span: a basis of the quotient in that range.
    fn standard_monomials(&self, w: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .columns
            .labels
            .iter()
            .enumerate()
            .filter(|(i, m)| weight(**m) <= w && !self.echelon.pivots.contains(i))
            .map(|(_, m)| *m)
            .collect();
        out.sort_by_key(|&m| (weight(m), m.1));
        out
    }

    /// The remainder of `p` modulo the span.
    fn reduce(&self, ring: &PlaneCurveRing, p: &Poly) -> Result<Poly> {
        let v = self.columns.vector(ring.field, p.terms.iter().map(|(m, c)| (*m, c.clone())))?;
        let r = self.echelon.reduce(&v);
        let mut out = Poly::zero(ring.field);
        for (m, c) in self.columns.labels.iter().zip(r) {
            out.add_term(*m, c);
        }
        Ok(out)
    }
}

/// The Tjurina algebra `T = R/(f_x, f_y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tjurina {
    pub dimension: usize,
    /// Monomials whose classes form a basis, by increasing weight.
    pub basis: Vec<Monomial>,
    pub bound: u32,
}

fn tjurina_at(ring: &PlaneCurveRing, bound: u32) -> Result<Tjurina> {
    let span = IdealSpan::new(ring, &[ring.f_x(), ring.f_y()], bound)?;
    let basis = span.standard_monomials(bound / 2);
    Ok(Tjurina { dimension: basis.len(), basis, bound })
}

/// `dim R/(f_x, f_y)` with multipliers of weight at most `bound`, checked
/// against `bound + 2`.
pub fn tjurina_dim(ring: &PlaneCurveRing, bound: u32) -> Result<Tjurina> {
    let t = tjurina_at(ring, bound)?;
    let t2 = tjurina_at(ring, bound + 2)?;
    if t.basis != t2.basis {
        return Err(Error::NotStabilized { bound });
    }
    Ok(t)
}

/// A pair `(α₁, α₂) ∈ R²`, standing for `α₁x* + α₂y*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair(pub Poly, pub Poly);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// `H₁` of the Koszul complex `R → R² → R` on `(f_x, f_y)`:
/// `M = ker(α ↦ α₁f_x + α₂f_y)` modulo `N = R·(f_y, −f_x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulH1 {
    pub dimension: usize,
    /// Representatives of a basis of `M/N`.
    pub generators: Vec<Pair>,
    pub bound: u32,
}

type PairLabel = (u8, Monomial);

fn pair_columns(ring: &PlaneCurveRing, w: u32) -> Columns<PairLabel> {
    let mut labels: Vec<PairLabel> = ring.monomials_up_to(w).into_iter().flat_map(|m| [(0, m), (1, m)]).collect();
    labels.sort_by_key(|&(i, m)| std::cmp::Reverse((weight(m), m.1, i)));
    Columns::new(labels)
}

fn pair_vector(cols: &Columns<PairLabel>, field: Ring, p: &Pair) -> Result<Vec<Scalar>> {
    let first = p.0.terms.iter().map(|(m, c)| ((0u8, *m), c.clone()));
    let second = p.1.terms.iter().map(|(m, c)| ((1u8, *m), c.clone()));
    cols.vector(field, first.chain(second))
}

fn pair_from_vector(cols: &Columns<PairLabel>, field: Ring, v: &[Scalar]) -> Pair {
    let mut out = Pair(Poly::zero(field), Poly::zero(field));
    for ((i, m), c) in cols.labels.iter().zip(v) {
        let slot = if *i == 0 { &mut out.0 } else { &mut out.1 };
        slot.add_term(*m, c.clone());
    }
    out
}

fn koszul_at(ring: &PlaneCurveRing, bound: u32) -> Result<KoszulH1> {
    let field = ring.field;
    let d = bound / 2;
    let (fx, fy) = (ring.f_x(), ring.f_y());

    // M ∩ P_{≤d}: the kernel of α ↦ α₁f_x + α₂f_y on pairs of weight ≤ d.
    let small = pair_columns(ring, d);
    let images = small
        .labels
        .iter()
        .map(|&(i, m)| ring.mul(&Poly::monomial(field, m), if i == 0 { &fx } else { &fy }))
        .collect::<Result<Vec<_>>>()?;
    let top = images.iter().filter_map(Poly::max_weight).max().unwrap_or(0);
    let target = Columns::new(ring.monomials_up_to(top));
    let mut phi = Matrix::zeros(field, target.len(), small.len())?;
    for (j, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            phi.set(target.index[m], j, c.clone());
        }
    }
    let cycles = phi.kernel();

    // N ∩ P_{≤d}: rows of the echelonized span of m·(f_y, −f_x), weight(m)
    // ≤ bound, whose leading column has weight ≤ d.
    let neg_fx = fx.scale(&Scalar::from_i64(field, -1));
    let gens = ring
        .monomials_up_to(bound)
        .into_iter()
        .map(|m| {
            let mp = Poly::monomial(field, m);
            Ok(Pair(ring.mul(&mp, &fy)?, ring.mul(&mp, &neg_fx)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let top = gens.iter().flat_map(|p| [p.0.max_weight(), p.1.max_weight()]).flatten().max().unwrap_or(0);
    let big = pair_columns(ring, top.max(d));
    let rows = gens.iter().map(|p| pair_vector(&big, field, p)).collect::<Result<Vec<_>>>()?;
    let n_span = Matrix::from_rows(field, big.len(), rows)?.echelon();
    let low_rows = n_span.pivots.iter().filter(|&&c| weight(big.labels[c].1) <= d).count();

    // Representatives: cycles reduced modulo N, then echelonized.
    let reduced = cycles
        .iter()
        .map(|v| {
            let pair = pair_from_vector(&small, field, v);
            Ok(n_span.reduce(&pair_vector(&big, field, &pair)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let quotient = Matrix::from_rows(field, big.len(), reduced)?.echelon();
    let dimension = cycles.len() - low_rows;
    if quotient.rank() != dimension {
        return Err(verification(
            "koszul H1",
            format!("rank {} of reduced cycles differs from {} − {}", quotient.rank(), cycles.len(), low_rows),
        ));
    }
    let generators = (0..dimension).map(|r| pair_from_vector(&big, field, quotient.matrix.row(r))).collect();
    Ok(KoszulH1 { dimension, generators, bound })
}

/// `dim M/N` with multipliers of weight at most `bound`, checked against
/// `bound + 2`.
pub fn koszul_h1_dim(ring: &PlaneCurveRing, bound: u32) -> Result<KoszulH1> {
    let h = koszul_at(ring, bound)?;
    let h2 = koszul_at(ring, bound + 2)?;
    if h.dimension != h2.dimension {
        return Err(Error::NotStabilized { bound });
    }
    Ok(h)
}

/// The pairing `ω(α, γ) = [α₁γ₂ − α₂γ₁] ∈ T` on the given generators, as
/// normal forms in the Tjurina basis. A nonzero value is an error.
pub fn omega_pairing(ring: &PlaneCurveRing, generators: &[Pair], bound: u32) -> Result<Vec<Vec<Poly>>> {
    let top = generators
        .iter()
        .flat_map(|p| [p.0.max_weight(), p.1.max_weight()])
        .flatten()
        .max()
        .unwrap_or(0);
    // Products reach weight 2·top; the span must reach past that.
    let span = IdealSpan::new(ring, &[ring.f_x(), ring.f_y()], bound.max(4 * top + 4))?;
    let mut table = Vec::with_capacity(generators.len());
    for (i, a) in generators.iter().enumerate() {
        let mut row = Vec::with_capacity(generators.len());
        for (j, g) in generators.iter().enumerate() {
            let value = ring.mul(&a.0, &g.1)?.sub(&ring.mul(&a.1, &g.0)?);
            let class = span.reduce(ring, &value)?;
            if !class.is_zero() {
                return Err(verification("skew pairing", format!("ω(m{i}, m{j}) = {class} ≠ 0")));
            }
            row.push(class);
        }
        table.push(row);
    }
    Ok(table)
}

/// Ranks indexed by (cohomological degree `n`, internal degree `s`) over a
/// window `0 ≤ n ≤ n_max`, `s_min ≤ s ≤ 0`. Every bucket in the window is
/// present, including zeros; nothing outside it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRankTable {
    pub n_max: u32,
    pub s_min: i64,
    ranks: BTreeMap<(u32, i64), usize>,
}

impl GradedRankTable {
    fn empty(n_max: u32, s_min: i64) -> GradedRankTable {
        let ranks = (0..=n_max).flat_map(|n| (s_min..=0).map(move |s| ((n, s), 0))).collect();
        GradedRankTable { n_max, s_min, ranks }
    }

    pub fn get(&self, n: u32, s: i64) -> Option<usize> {
        self.ranks.get(&(n, s)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64, usize)> + '_ {
        self.ranks.iter().map(|(&(n, s), &r)| (n, s, r))
    }

    /// Total rank of the row `n`.
    pub fn row_total(&self, n: u32) -> usize {
        self.iter().filter(|e| e.0 == n).map(|e| e.2).sum()
    }

    /// The nonzero buckets `(s, rank)` of the row `n`.
    pub fn row(&self, n: u32) -> Vec<(i64, usize)> {
        self.iter().filter(|e| e.0 == n && e.2 > 0).map(|e| (e.1, e.2)).collect()
    }

    /// The sub-table on `n_lo ≤ n`.
    pub fn from_degree(&self, n_lo: u32) -> BTreeMap<(u32, i64), usize> {
        self.ranks.iter().filter(|((n, _), _)| *n >= n_lo).map(|(k, v)| (*k, *v)).collect()
    }
}

impl fmt::Display for GradedRankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.n_max {
            let row: Vec<String> = self.row(n).iter().map(|(s, r)| format!("{s}:{r}")).collect();
            writeln!(f, "HH^{n}: {}", if row.is_empty() { "0".to_string() } else { row.join(" ") })?;
        }
        Ok(())
    }
}

/// Internal degrees of the generators of `D`.
const S_X_STAR: i64 = -2;
const S_Y_STAR: i64 = -3;
const S_BETA: i64 = -6;

/// A generator `β^b · e` of `D` over `R`, `e ⊆ {x*, y*}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct KoszulGen {
    beta: u32,
    x_star: bool,
    y_star: bool,
}

impl KoszulGen {
    fn internal(&self) -> i64 {
        S_BETA * self.beta as i64 + if self.x_star { S_X_STAR } else { 0 } + if self.y_star { S_Y_STAR } else { 0 }
    }

    fn of_degree(n: u32) -> Vec<KoszulGen> {
        let g = |beta, x_star, y_star| KoszulGen { beta, x_star, y_star };
        if n.is_multiple_of(2) {
            let mut out = vec![g(n / 2, false, false)];
            if n >= 2 {
                out.push(g(n / 2 - 1, true, true));
            }
            out
        } else {
            vec![g(n / 2, true, false), g(n / 2, false, true)]
        }
    }
}

type KoszulLabel = (KoszulGen, Monomial);

/// The basis `r·g` of `D_n` in internal degree `s`.
fn koszul_piece(ring: &PlaneCurveRing, n: u32, s: i64) -> Vec<KoszulLabel> {
    KoszulGen::of_degree(n)
        .into_iter()
        .flat_map(|g| ring.monomials_of_weight(s - g.internal()).into_iter().map(move |m| (g, m)))
        .collect()
}

/// `d(r·g)` as a list of `(generator, coefficient in R)`.
fn koszul_d(ring: &PlaneCurveRing, g: KoszulGen, r: &Poly) -> Result<Vec<(KoszulGen, Poly)>> {
    let next = |x_star, y_star| KoszulGen { beta: g.beta + 1, x_star, y_star };
    let (fx, fy) = (ring.f_x(), ring.f_y());
    Ok(match (g.x_star, g.y_star) {
        (false, false) => Vec::new(),
        (true, false) => vec![(next(false, false), ring.mul(r, &fx)?)],
        (false, true) => vec![(next(false, false), ring.mul(r, &fy)?)],
        // d(x*y*) = f_x β y* − f_y β x*
        (true, true) => vec![
            (next(false, true), ring.mul(r, &fx)?),
            (next(true, false), ring.mul(r, &fy)?.scale(&Scalar::from_i64(ring.field, -1))),
        ],
    })
}

/// The rank of `d : D_n^s → D_{n+1}^s`.
fn koszul_d_rank(ring: &PlaneCurveRing, n: u32, s: i64) -> Result<usize> {
    let source = koszul_piece(ring, n, s);
    let target = Columns::new(koszul_piece(ring, n + 1, s));
    if source.is_empty() || target.len() == 0 {
        return Ok(0);
    }
    let rows = source
        .iter()
        .map(|(g, m)| {
            let terms = koszul_d(ring, *g, &Poly::monomial(ring.field, *m))?;
            let entries = terms
                .into_iter()
                .flat_map(|(h, p)| p.terms.into_iter().map(move |(m2, c)| ((h, m2), c)))
                .collect::<Vec<_>>();
            target.vector(ring.field, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(ring.field, target.len(), rows)?.rank())
}

/// Ranks of `H^n(D, d)` in internal degree `s` on the window, for the cusp.
pub fn cusp_graded_ranks(field: Ring, n_max: u32, s_min: i64) -> Result<GradedRankTable> {
    if n_max > 10 || !(-14..=0).contains(&s_min) {
        return Err(usage("the window must have n_max ≤ 10 and −14 ≤ s_min ≤ 0"));
    }
    let ring = PlaneCurveRing::cusp(field)?;
    let mut table = GradedRankTable::empty(n_max, s_min);
    for n in 0..=n_max {
        for s in s_min..=0 {
            let dim = koszul_piece(&ring, n, s).len();
            let out = koszul_d_rank(&ring, n, s)?;
            let inc = if n == 0 { 0 } else { koszul_d_rank(&ring, n - 1, s)? };
            table.ranks.insert((n, s), dim - out - inc);
        }
    }
    Ok(table)
}

/// Weights of the Tjurina basis of the cusp and `s(γ)`, by characteristic.
pub fn cusp_degree_data(characteristic: u64) -> Result<(Vec<i64>, i64)> {
    match characteristic {
        2 => Ok((vec![0, 2, 3, 5], -3)),
        3 => Ok((vec![0, 2, 4], -2)),
        0 | 5 => Ok((vec![0, 2], 0)),
        c => Err(usage(format!("no degree data for characteristic {c}"))),
    }
}

/// Ranks of `(T ⊗ K[β] ⊗ Λ[γ])` with `β` in bidegree `(2, −6)` and `γ` in
/// `(1, s(γ))`, restricted to the window.
pub fn predicted_cusp_table(characteristic: u64, n_max: u32, s_min: i64) -> Result<GradedRankTable> {
    let (t_weights, s_gamma) = cusp_degree_data(characteristic)?;
    let mut table = GradedRankTable::empty(n_max, s_min);
    for b in 0..=n_max / 2 {
        for e in 0..=1u32 {
            let n = 2 * b + e;
            if n > n_max {
                continue;
            }
            for &w in &t_weights {
                let s = w + S_BETA * b as i64 + s_gamma * e as i64;
                if let Some(r) = table.ranks.get_mut(&(n, s)) {
                    *r += 1;
                }
            }
        }
    }
    Ok(table)
}
