//! Spectral radius enclosures and certified comparisons.
//!
//! Floating enclosures come from power iteration on `A + I` with
//! Collatz–Wielandt bounds, padded outward for rounding. Exact results use the
//! integer characteristic polynomial, its square-free part and a Sturm chain.

mod poly;

pub use poly::{char_poly, CharPoly, IntPoly, Sturm};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

/// Default enclosure width.
pub const DEFAULT_WIDTH: f64 = 1e-9;
/// Power iteration cap.
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMethod {
    CollatzWielandt,
    CharpolyBisection,
}

/// Closed interval `[lo, hi]` containing a spectral radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootInterval {
    pub lo: f64,
    pub hi: f64,
    pub method: RootMethod,
}

impl RootInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Non-negative eigenvector for `ρ`, scaled so the largest entry is 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerronVector {
    pub values: Vec<f64>,
    /// True when the graph is disconnected and only the component attaining `ρ` carries weight.
    pub partial: bool,
}

/// Power iteration on one connected component given as adjacency lists.
fn component_enclosure(adj: &[Vec<usize>], width: f64) -> Result<(f64, f64, Vec<f64>)> {
    let m = adj.len();
    if m == 1 {
        return Ok((0.0, 0.0, vec![1.0]));
    }
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    // relative rounding in one ratio (Ax)_i / x_i is below (deg + 2)·ε; pad generously
    let rel = 4.0 * (max_deg as f64 + 4.0) * f64::EPSILON;
    let floor = 2.0 * rel * (max_deg as f64 + 1.0);
    if width <= floor {
        return Err(Error::Precision(format!(
            "requested width {width:e} is below the floating-point floor {floor:e}; use exact mode"
        )));
    }
    let mut x = vec![1.0f64; m];
    let mut y = vec![0.0f64; m];
    for _ in 0..MAX_ITERATIONS {
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..m {
            let s: f64 = adj[i].iter().map(|&w| x[w]).sum();
            y[i] = s;
            let r = s / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let lo = (lo * (1.0 - rel)).next_down().max(0.0);
        let hi = (hi * (1.0 + rel)).next_up();
        if hi - lo <= width {
            return Ok((lo, hi, x));
        }
        // x ← (A + I)x, rescaled
        let mut top = 0.0f64;
        for i in 0..m {
            y[i] += x[i];
            top = top.max(y[i]);
        }
        for i in 0..m {
            x[i] = y[i] / top;
            if x[i] < f64::MIN_POSITIVE {
                x[i] = f64::MIN_POSITIVE;
            }
        }
    }
    Err(Error::Precision(format!(
        "power iteration did not reach width {width:e} within {MAX_ITERATIONS} steps; use exact mode"
    )))
}

/// Rigorous enclosure of `ρ(g)` of width at most `width`, plus a Perron vector.
pub fn rho_enclosure(g: &Graph, width: f64) -> Result<(RootInterval, PerronVector)> {
    if width.is_nan() || width <= 0.0 {
        return domain(format!("width must be positive, got {width}"));
    }
    let n = g.order();
    let mut values = vec![0.0; n];
    if n == 0 {
        let iv = RootInterval { lo: 0.0, hi: 0.0, method: RootMethod::CollatzWielandt };
        return Ok((iv, PerronVector { values, partial: false }));
    }
    let comps = g.component_vertex_sets();
    let mut best: Option<(f64, f64, usize, Vec<f64>)> = None;
    let (mut lo_all, mut hi_all) = (0.0f64, 0.0f64);
    for (ci, comp) in comps.iter().enumerate() {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in comp.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Vec<Vec<usize>> = comp.iter().map(|&v| g.neighbors(v).map(|w| pos[w]).collect()).collect();
        let (lo, hi, x) = component_enclosure(&adj, width)?;
        lo_all = lo_all.max(lo);
        hi_all = hi_all.max(hi);
        let better = match &best {
            None => true,
            Some((blo, bhi, _, _)) => lo + hi > blo + bhi,
        };
        if better {
            best = Some((lo, hi, ci, x));
        }
    }
    let (_, _, ci, x) = best.expect("at least one component");
    for (i, &v) in comps[ci].iter().enumerate() {
        values[v] = x[i];
    }
    let iv = RootInterval { lo: lo_all, hi: hi_all, method: RootMethod::CollatzWielandt };
    Ok((iv, PerronVector { values, partial: comps.len() > 1 }))
}

/// `ρ(g)` to [`DEFAULT_WIDTH`].
pub fn rho(g: &Graph) -> Result<RootInterval> {
    Ok(rho_enclosure(g, DEFAULT_WIDTH)?.0)
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Largest `f64` not above `x`.
fn f64_down(x: &BigRational) -> f64 {
    let mut f = x.to_f64().unwrap_or(f64::NEG_INFINITY);
    while f.is_finite() && rational(f) > *x {
        f = f.next_down();
    }
    f
}

/// Smallest `f64` not below `x`.
fn f64_up(x: &BigRational) -> f64 {
    let mut f = x.to_f64().unwrap_or(f64::INFINITY);
    while f.is_finite() && rational(f) < *x {
        f = f.next_up();
    }
    f
}

/// Exact data for the largest adjacency eigenvalue of a graph.
#[derive(Clone, Debug)]
pub struct ExactRho {
    sturm: Sturm,
    /// `ρ` lies in `(lo, hi]` and is the only root of the square-free part above `lo`.
    lo: BigRational,
    hi: BigRational,
    exact: bool,
}

impl ExactRho {
    /// Starts from `(−1, Δ]`, which contains `ρ` for every graph with an edge or vertex.
    fn unrefined(g: &Graph) -> Result<ExactRho> {
        let p = char_poly(g)?;
        let sturm = Sturm::new(&p.as_poly().square_free());
        if g.order() == 0 {
            return Ok(ExactRho { sturm, lo: int(0), hi: int(0), exact: true });
        }
        let hi = int(g.max_degree() as i64);
        if sturm.poly().sign_at(&hi) == Ordering::Equal {
            return Ok(ExactRho { sturm, lo: hi.clone(), hi, exact: true });
        }
        Ok(ExactRho { sturm, lo: int(-1), hi, exact: false })
    }

    /// Raises `lo` until `ρ` is the only root above it.
    fn isolate(&mut self) {
        while !self.exact && self.sturm.roots_above(&self.lo) > 1 {
            self.bisect_step();
        }
    }

    pub fn new(g: &Graph) -> Result<ExactRho> {
        let mut r = ExactRho::unrefined(g)?;
        r.isolate();
        Ok(r)
    }

    /// Like [`ExactRho::new`], seeded with a rigorous floating enclosure.
    pub fn with_enclosure(g: &Graph, iv: &RootInterval) -> Result<ExactRho> {
        let mut r = ExactRho::unrefined(g)?;
        if !r.exact {
            let lo = rational(iv.lo) - BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
            let hi = rational(iv.hi);
            if lo > r.lo && r.sturm.roots_above(&lo) >= 1 {
                r.lo = lo;
            }
            if hi < r.hi && r.sturm.roots_above(&hi) == 0 {
                if r.sturm.poly().sign_at(&hi) == Ordering::Equal {
                    r.lo = hi.clone();
                    r.exact = true;
                }
                r.hi = hi;
            }
        }
        r.isolate();
        Ok(r)
    }

    fn bisect_step(&mut self) {
        let mid = (&self.lo + &self.hi) / int(2);
        if self.sturm.roots_above(&mid) >= 1 {
            self.lo = mid;
        } else {
            if self.sturm.poly().sign_at(&mid) == Ordering::Equal {
                self.lo = mid.clone();
                self.exact = true;
            }
            self.hi = mid;
        }
    }

    /// Refines until `hi − lo ≤ width` or `ρ` is pinned exactly.
    pub fn refine(&mut self, width: &BigRational) {
        while !self.exact && &self.hi - &self.lo > *width {
            self.bisect_step();
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn bounds(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn interval(&self) -> RootInterval {
        RootInterval { lo: f64_down(&self.lo), hi: f64_up(&self.hi), method: RootMethod::CharpolyBisection }
    }

    fn square_free(&self) -> &IntPoly {
        self.sturm.poly()
    }
}

/// `ρ(g)` by exact bisection on the characteristic polynomial.
pub fn rho_exact(g: &Graph, width: f64) -> Result<RootInterval> {
    if width.is_nan() || width <= 0.0 {
        return domain(format!("width must be positive, got {width}"));
    }
    let mut r = ExactRho::new(g)?;
    r.refine(&rational(width));
    let iv = r.interval();
    if iv.hi - iv.lo > width && !r.exact {
        // outward rounding can add a couple of ulps
        r.refine(&rational(width / 4.0));
        return Ok(r.interval());
    }
    Ok(iv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonMethod {
    Enclosure,
    Exact,
}

/// Outcome of [`compare_rho`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoComparison {
    /// Ordering of `ρ(g1)` relative to `ρ(g2)`.
    #[serde(with = "ordering_text")]
    pub ordering: Ordering,
    pub method: ComparisonMethod,
    /// Certified lower bound on `|ρ(g1) − ρ(g2)|`; zero for `Equal`.
    pub gap_lower_bound: f64,
    pub first: RootInterval,
    pub second: RootInterval,
}

mod ordering_text {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::cmp::Ordering;

    pub fn serialize<S: Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match o {
            Ordering::Less => "less",
            Ordering::Equal => "equal",
            Ordering::Greater => "greater",
        })
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ordering, D::Error> {
        match String::deserialize(d)?.as_str() {
            "less" => Ok(Ordering::Less),
            "equal" => Ok(Ordering::Equal),
            "greater" => Ok(Ordering::Greater),
            other => Err(serde::de::Error::custom(format!("unknown ordering {other:?}"))),
        }
    }
}

fn strict(first: RootInterval, second: RootInterval, method: ComparisonMethod) -> Option<RhoComparison> {
    let (ordering, gap) = if first.hi < second.lo {
        (Ordering::Less, second.lo - first.hi)
    } else if second.hi < first.lo {
        (Ordering::Greater, first.lo - second.hi)
    } else {
        return None;
    };
    // the subtraction itself rounds; step one ulp down to keep the bound certified
    let gap_lower_bound = gap.next_down().max(0.0);
    Some(RhoComparison { ordering, method, gap_lower_bound, first, second })
}

/// Certified comparison of spectral radii.
///
/// Disjoint floating enclosures settle strict cases. Otherwise the exact
/// backend decides equality through the common factor of the square-free
/// characteristic polynomials and separates unequal roots by bisection.
pub fn compare_rho(g1: &Graph, g2: &Graph) -> Result<RhoComparison> {
    let e1 = rho(g1)?;
    let e2 = rho(g2)?;
    compare_with_enclosures(g1, &e1, g2, &e2)
}

/// [`compare_rho`] reusing already computed enclosures.
pub fn compare_with_enclosures(g1: &Graph, e1: &RootInterval, g2: &Graph, e2: &RootInterval) -> Result<RhoComparison> {
    if let Some(c) = strict(*e1, *e2, ComparisonMethod::Enclosure) {
        return Ok(c);
    }
    if g1.rows().is_none() || g2.rows().is_none() {
        let w = 1e-13;
        let (f1, f2) = (rho_enclosure(g1, w)?.0, rho_enclosure(g2, w)?.0);
        return strict(f1, f2, ComparisonMethod::Enclosure).ok_or_else(|| {
            Error::Precision("spectral radii agree to 1e-13 and exact mode needs order <= 64".into())
        });
    }
    let mut x1 = ExactRho::with_enclosure(g1, e1)?;
    let mut x2 = ExactRho::with_enclosure(g2, e2)?;
    exact_compare(&mut x1, &mut x2)
}

/// Exact comparison of two isolated largest roots.
pub fn exact_compare(x1: &mut ExactRho, x2: &mut ExactRho) -> Result<RhoComparison> {
    let lo = if x1.lo > x2.lo { x1.lo.clone() } else { x2.lo.clone() };
    let common = x1.square_free().gcd(x2.square_free());
    let equal = if x1.exact && x2.exact {
        x1.lo == x2.lo
    } else {
        common.degree() > 0 && Sturm::new(&common).roots_above(&lo) > 0
            || (x1.exact && x2.square_free().sign_at(&x1.lo) == Ordering::Equal && x2.lo < x1.lo && x1.lo <= x2.hi)
            || (x2.exact && x1.square_free().sign_at(&x2.lo) == Ordering::Equal && x1.lo < x2.lo && x2.lo <= x1.hi)
    };
    if equal {
        return Ok(RhoComparison {
            ordering: Ordering::Equal,
            method: ComparisonMethod::Exact,
            gap_lower_bound: 0.0,
            first: x1.interval(),
            second: x2.interval(),
        });
    }
    loop {
        // ρ ∈ (lo, hi] unless pinned exactly; touching intervals are refined further so the gap is positive
        if x1.hi < x2.lo {
            let gap = f64_down(&(&x2.lo - &x1.hi)).max(0.0);
            return Ok(RhoComparison {
                ordering: Ordering::Less,
                method: ComparisonMethod::Exact,
                gap_lower_bound: gap,
                first: x1.interval(),
                second: x2.interval(),
            });
        }
        if x2.hi < x1.lo {
            let gap = f64_down(&(&x1.lo - &x2.hi)).max(0.0);
            return Ok(RhoComparison {
                ordering: Ordering::Greater,
                method: ComparisonMethod::Exact,
                gap_lower_bound: gap,
                first: x1.interval(),
                second: x2.interval(),
            });
        }
        let w1 = &x1.hi - &x1.lo;
        let w2 = &x2.hi - &x2.lo;
        if !x1.exact && (w1 >= w2 || x2.exact) {
            x1.bisect_step();
        } else if !x2.exact {
            x2.bisect_step();
        } else {
            unreachable!("two distinct exact roots are always separated");
        }
    }
}

/// Closed-form upper bound `½(s+t−3 + √((s+t−3)² + 4(s−1)(n−s+1) − 4(s−2)(t−1)))`.
pub fn tait_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    if s < 2 || s > t || n < s + t {
        return domain(format!("requires 2 <= s <= t and n >= s + t (n={n}, s={s}, t={t})"));
    }
    let (n, s, t) = (n as f64, s as f64, t as f64);
    let b = s + t - 3.0;
    Ok(0.5 * (b + (b * b + 4.0 * (s - 1.0) * (n - s + 1.0) - 4.0 * (s - 2.0) * (t - 1.0)).sqrt()))
}

/// Largest real root of `ρ³ − (t−3)ρ² − (2t−2)ρ + a0·a1`, the spectral radius of the
/// complement of `K_{1,2} ∪ a matching` in the odd-order `K_{1,t}`-minor-free case.
pub fn cubic_largest_root(t: usize, a0: usize, a1: usize) -> Result<f64> {
    if t < 4 || a0 + a1 != t - 1 || a1 % 2 != 0 {
        return domain(format!("requires t >= 4, a0 + a1 = t − 1 and a1 even (t={t}, a0={a0}, a1={a1})"));
    }
    let tf = t as f64;
    let c2 = -(tf - 3.0);
    let c1 = -(2.0 * tf - 2.0);
    let c0 = (a0 * a1) as f64;
    let f = |x: f64| ((x + c2) * x + c1) * x + c0;
    // critical points of f
    let disc = (c2 * c2 - 3.0 * c1).sqrt();
    let (xm, xp) = ((-c2 - disc) / 3.0, (-c2 + disc) / 3.0);
    let bound = 1.0 + c2.abs().max(c1.abs()).max(c0.abs());
    let (mut lo, mut hi) = if f(xp) <= 0.0 { (xp, bound) } else { (-bound, xm) };
    // f(lo) ≤ 0 < f(hi) on the increasing branch
    while hi - lo > 0.0 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Spectral radius of the quotient matrix of an equitable partition.
pub fn quotient_rho(g: &Graph, partition: &[Vec<usize>]) -> Result<f64> {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    for (ci, cell) in partition.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::Validation(format!("class {ci} is empty")));
        }
        for &v in cell {
            if v >= n {
                return Err(Error::Validation(format!("vertex {v} out of range in class {ci}")));
            }
            if class[v] != usize::MAX {
                return Err(Error::Validation(format!("vertex {v} appears in classes {} and {ci}", class[v])));
            }
            class[v] = ci;
        }
    }
    if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
        return Err(Error::Validation(format!("vertex {v} is in no class")));
    }
    let k = partition.len();
    let mut b = vec![vec![0usize; k]; k];
    for (ci, cell) in partition.iter().enumerate() {
        for (idx, &v) in cell.iter().enumerate() {
            let mut counts = vec![0usize; k];
            for w in g.neighbors(v) {
                counts[class[w]] += 1;
            }
            if idx == 0 {
                b[ci] = counts;
            } else if let Some(cj) = (0..k).find(|&cj| counts[cj] != b[ci][cj]) {
                return Err(Error::Validation(format!(
                    "partition is not equitable: vertex {v} has {} neighbours in class {cj}, vertex {} has {}",
                    counts[cj], cell[0], b[ci][cj]
                )));
            }
        }
    }
    // power iteration on B + I with Collatz–Wielandt bounds
    let mut x = vec![1.0f64; k];
    let mut y = vec![0.0f64; k];
    for _ in 0..MAX_ITERATIONS {
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..k {
            y[i] = (0..k).map(|j| b[i][j] as f64 * x[j]).sum::<f64>() + x[i];
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi - lo <= 1e-13 * hi.max(1.0) {
            return Ok(0.5 * (lo + hi) - 1.0);
        }
        let top = y.iter().cloned().fold(0.0, f64::max);
        for i in 0..k {
            x[i] = (y[i] / top).max(f64::MIN_POSITIVE);
        }
    }
    Err(Error::Precision("quotient power iteration did not converge".into()))
}
