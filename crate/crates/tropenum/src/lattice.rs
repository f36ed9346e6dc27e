//! Integer lattice vectors, Newton fans, dual polygons, and the small
//! combinatorial coefficient zoo used by the counting formulas.
//!
//! Fans are kept in a canonical multiset form (entries sorted, equal vectors
//! merged) so that fan equality, hashing and decomposition enumeration are
//! deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TropError};

/// A 2-dimensional integer lattice vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: i64,
    pub y: i64,
}

/// A 3-dimensional integer lattice vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

pub const fn v2(x: i64, y: i64) -> Vec2 {
    Vec2 { x, y }
}

pub const fn v3(x: i64, y: i64, z: i64) -> Vec3 {
    Vec3 { x, y, z }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Vec2 {
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn neg(&self) -> Vec2 {
        v2(-self.x, -self.y)
    }

    pub fn add(&self, o: Vec2) -> Vec2 {
        v2(self.x + o.x, self.y + o.y)
    }

    pub fn sub(&self, o: Vec2) -> Vec2 {
        v2(self.x - o.x, self.y - o.y)
    }

    pub fn scale(&self, c: i64) -> Vec2 {
        v2(self.x * c, self.y * c)
    }

    /// gcd of the absolute coordinates; the weight of the vector.
    pub fn weight(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(TropError::InvalidVector);
        }
        Ok(gcd_i64(self.x, self.y))
    }

    pub fn primitive(&self) -> Result<Vec2> {
        let w = self.weight()?;
        Ok(v2(self.x / w, self.y / w))
    }

    pub fn cross(&self, o: Vec2) -> i64 {
        self.x * o.y - self.y * o.x
    }

    /// Rotate by -90 degrees: the inverse of the fan -> polygon edge rule.
    pub fn rot_cw(&self) -> Vec2 {
        v2(self.y, -self.x)
    }

    /// Rotate by +90 degrees: fan direction (a,b) -> polygon edge (-b,a).
    pub fn rot_ccw(&self) -> Vec2 {
        v2(-self.y, self.x)
    }
}

impl Vec3 {
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    pub fn neg(&self) -> Vec3 {
        v3(-self.x, -self.y, -self.z)
    }

    pub fn add(&self, o: Vec3) -> Vec3 {
        v3(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn weight(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(TropError::InvalidVector);
        }
        Ok(gcd_i64(gcd_i64(self.x, self.y), self.z))
    }

    /// max(x, y, z): the tropical polynomial cutting out the surface X.
    pub fn tropical_max(&self) -> i64 {
        self.x.max(self.y).max(self.z)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Small trait so `NewtonFan` works for plane fans and fans in Z^3.
pub trait LatticeVec: Copy + Ord + fmt::Debug {
    fn vec_is_zero(&self) -> bool;
    fn vec_add(&self, o: Self) -> Self;
    fn vec_zero() -> Self;
}

impl LatticeVec for Vec2 {
    fn vec_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn vec_add(&self, o: Self) -> Self {
        self.add(o)
    }
    fn vec_zero() -> Self {
        v2(0, 0)
    }
}

impl LatticeVec for Vec3 {
    fn vec_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn vec_add(&self, o: Self) -> Self {
        self.add(o)
    }
    fn vec_zero() -> Self {
        v3(0, 0, 0)
    }
}

/// A balanced multiset of nonzero lattice vectors, in canonical form:
/// entries sorted lexicographically, equal vectors merged into a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonFan<V: LatticeVec> {
    entries: Vec<(V, u32)>,
}

pub type Fan2 = NewtonFan<Vec2>;
pub type Fan3 = NewtonFan<Vec3>;

impl<V: LatticeVec> NewtonFan<V> {
    /// Build a fan from (vector, multiplicity) data, canonicalizing and
    /// checking the balancing condition `sum v_i = 0`.
    pub fn new(raw: impl IntoIterator<Item = (V, u32)>) -> Result<Self> {
        let mut entries: Vec<(V, u32)> = Vec::new();
        let mut sum = V::vec_zero();
        for (v, m) in raw {
            if m == 0 {
                continue;
            }
            if v.vec_is_zero() {
                return Err(TropError::InvalidVector);
            }
            for _ in 0..m {
                sum = sum.vec_add(v);
            }
            entries.push((v, m));
        }
        entries.sort();
        let mut merged: Vec<(V, u32)> = Vec::new();
        for (v, m) in entries {
            match merged.last_mut() {
                Some((lv, lm)) if *lv == v => *lm += m,
                _ => merged.push((v, m)),
            }
        }
        if !sum.vec_is_zero() {
            return Err(TropError::UnbalancedFan);
        }
        Ok(NewtonFan { entries: merged })
    }

    /// Entries as (vector, multiplicity) pairs in canonical order.
    pub fn entries(&self) -> &[(V, u32)] {
        &self.entries
    }

    /// Total number of vectors counted with multiplicity (`#delta`).
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Expand into individual vectors, repeating by multiplicity.
    pub fn expand(&self) -> Vec<V> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for &(v, m) in &self.entries {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }

    pub fn multiplicity_of(&self, v: &V) -> u32 {
        self.entries
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }
}

impl Fan2 {
    /// The standard fan of a generic bidegree-(a,b) curve on the n-th
    /// Hirzebruch surface: {(1,n)^a, (0,-1)^(an+b), (-1,0)^a, (0,1)^b}.
    pub fn hirzebruch(a: u32, b: u32, n: u32) -> Result<Fan2> {
        let down = a * n + b;
        NewtonFan::new([
            (v2(1, n as i64), a),
            (v2(0, -1), down),
            (v2(-1, 0), a),
            (v2(0, 1), b),
        ])
    }

    /// Apply a 2x2 integer matrix to every entry (used for GL(2,Z) checks).
    pub fn transform(&self, m: &Mat2) -> Result<Fan2> {
        NewtonFan::new(self.entries.iter().map(|&(v, mult)| (m.apply(v), mult)))
    }

    pub fn dual_polygon(&self) -> Result<LatticePolygon> {
        LatticePolygon::dual_to(self)
    }
}

impl fmt::Display for Fan2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A 2x2 integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        v2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }
}

/// Convex lattice polygon given by its counterclockwise vertex cycle.
/// Degenerate fans (all directions on one line) produce a segment, stored as
/// its two endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<Vec2>,
}

/// Counterclockwise angular order starting at direction (1,0).
fn angle_cmp(a: Vec2, b: Vec2) -> std::cmp::Ordering {
    fn half(v: Vec2) -> u8 {
        if v.y > 0 || (v.y == 0 && v.x > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b)))
}

impl LatticePolygon {
    /// Dual polygon of a plane fan: for each primitive direction (p,q) with
    /// total weight w the polygon has the oriented edge w(-q,p); edges are
    /// assembled in counterclockwise order and the result is translated so
    /// that its lexicographically minimal vertex is the origin.
    pub fn dual_to(fan: &Fan2) -> Result<LatticePolygon> {
        if fan.is_empty() {
            return Ok(LatticePolygon { vertices: vec![v2(0, 0)] });
        }
        let mut by_prim: Vec<(Vec2, i64)> = Vec::new();
        for &(v, m) in fan.entries() {
            let p = v.primitive()?;
            let w = v.weight()? * m as i64;
            match by_prim.iter_mut().find(|(q, _)| *q == p) {
                Some((_, tw)) => *tw += w,
                None => by_prim.push((p, w)),
            }
        }
        let mut edges: Vec<Vec2> = by_prim
            .iter()
            .map(|&(p, w)| p.rot_ccw().scale(w))
            .collect();
        edges.sort_by(|a, b| angle_cmp(*a, *b));
        let mut vertices = Vec::with_capacity(edges.len());
        let mut pos = v2(0, 0);
        for e in &edges {
            vertices.push(pos);
            pos = pos.add(*e);
        }
        debug_assert!(pos.is_zero(), "dual polygon edges must close up");
        // Degenerate case: two antiparallel edges trace a segment.
        if edges.len() == 2 && edges[0].cross(edges[1]) == 0 {
            vertices = vec![vertices[0], vertices[1]];
        }
        let min = *vertices.iter().min().expect("nonempty");
        for v in &mut vertices {
            *v = v.sub(min);
        }
        // Rotate the cycle so the minimal vertex comes first.
        let k = vertices.iter().position(|v| v.is_zero()).expect("origin present");
        vertices.rotate_left(k);
        Ok(LatticePolygon { vertices })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Oriented edge vectors, in vertex-cycle order.
    pub fn edge_vectors(&self) -> Vec<Vec2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        if n == 2 {
            let e = self.vertices[1].sub(self.vertices[0]);
            return vec![e, e.neg()];
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].sub(self.vertices[i]))
            .collect()
    }

    /// Recover the fan from the edges by the inverse rotation rule.
    pub fn fan(&self) -> Result<Fan2> {
        NewtonFan::new(self.edge_vectors().into_iter().map(|e| {
            let w = e.weight().expect("polygon edges are nonzero");
            (e.rot_cw().primitive().unwrap().scale(w), 1)
        }))
    }

    pub fn is_convex(&self) -> bool {
        if self.is_degenerate() {
            return true;
        }
        let edges = self.edge_vectors();
        let n = edges.len();
        (0..n).all(|i| edges[i].cross(edges[(i + 1) % n]) > 0)
    }

    /// Axis-aligned bounding box (width, height).
    pub fn bbox(&self) -> (i64, i64) {
        let xs: Vec<i64> = self.vertices.iter().map(|v| v.x).collect();
        let ys: Vec<i64> = self.vertices.iter().map(|v| v.y).collect();
        let w = xs.iter().max().unwrap_or(&0) - xs.iter().min().unwrap_or(&0);
        let h = ys.iter().max().unwrap_or(&0) - ys.iter().min().unwrap_or(&0);
        (w, h)
    }

    /// Is `p` inside or on the boundary?
    pub fn contains(&self, p: Vec2) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => p == self.vertices[0],
            2 => {
                let a = self.vertices[0];
                let b = self.vertices[1];
                let ab = b.sub(a);
                let ap = p.sub(a);
                ab.cross(ap) == 0 && {
                    let dot = ab.x * ap.x + ab.y * ap.y;
                    dot >= 0 && dot <= ab.x * ab.x + ab.y * ab.y
                }
            }
            n => {
                let vs = &self.vertices;
                (0..n).all(|i| {
                    let e = vs[(i + 1) % n].sub(vs[i]);
                    e.cross(p.sub(vs[i])) >= 0
                })
            }
        }
    }

    fn strictly_contains(&self, p: Vec2) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        let vs = &self.vertices;
        (0..n).all(|i| {
            let e = vs[(i + 1) % n].sub(vs[i]);
            e.cross(p.sub(vs[i])) > 0
        })
    }

    /// Number of lattice points strictly inside; bounds the genus of curves
    /// dual to subdivisions of this polygon.
    pub fn interior_lattice_points(&self) -> u32 {
        if self.is_degenerate() {
            return 0;
        }
        let xs: Vec<i64> = self.vertices.iter().map(|v| v.x).collect();
        let ys: Vec<i64> = self.vertices.iter().map(|v| v.y).collect();
        let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let mut count = 0;
        for x in x0 + 1..x1 {
            for y in y0 + 1..y1 {
                if self.strictly_contains(v2(x, y)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Containment of this polygon in another, allowing any translation of
    /// `self` is not needed here: both polygons are origin-normalized by
    /// construction, and the decomposition bound is stated for those.
    pub fn contained_in(&self, other: &LatticePolygon) -> bool {
        self.vertices.iter().all(|&v| other.contains(v))
    }
}

// ---------------------------------------------------------------------------
// Combinatorial coefficients
// ---------------------------------------------------------------------------

/// Binomial coefficient as an exact integer; 0 outside the range 0 <= k <= t.
pub fn binomial(t: i64, k: i64) -> i128 {
    if k < 0 || k > t {
        return 0;
    }
    let k = k.min(t - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (t - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Multinomial coefficient `t` over the given parts; 0 when a part is
/// negative or the parts do not sum to `t`.
pub fn multinomial(t: i64, parts: &[i64]) -> i128 {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != t {
        return 0;
    }
    let mut acc: i128 = 1;
    let mut rest = t;
    for &p in parts {
        acc *= binomial(rest, p);
        rest -= p;
    }
    acc
}

pub fn factorial(n: i64) -> i128 {
    (1..=n as i128).product()
}

/// Double factorial of an odd integer, with (-1)!! = 1.
pub fn double_factorial(k: i64) -> Result<i128> {
    if k < -1 || k % 2 == 0 {
        return Err(TropError::InvalidArgument(format!(
            "double factorial needs an odd integer >= -1, got {k}"
        )));
    }
    let mut acc: i128 = 1;
    let mut i = k;
    while i >= 3 {
        acc *= i as i128;
        i -= 2;
    }
    Ok(acc)
}

/// Number of symmetries of a tuple: product of m! over the multiplicities m
/// of its distinct entries.
pub fn symmetry_tau(tuple: &[i64]) -> i128 {
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    let mut acc: i128 = 1;
    let mut run = 0i64;
    for i in 0..sorted.len() {
        run += 1;
        if i + 1 == sorted.len() || sorted[i + 1] != sorted[i] {
            acc *= factorial(run);
            run = 0;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(v2(0, -3).weight().unwrap(), 3);
        for n in -5..5 {
            assert_eq!(v2(1, n).weight().unwrap(), 1);
        }
        assert_eq!(v3(2, 2, 0).weight().unwrap(), 2);
        assert_eq!(v2(0, 0).weight(), Err(TropError::InvalidVector));
        // weight(c v) = |c| weight(v)
        for c in [-3i64, -1, 2, 5] {
            assert_eq!(v2(4, -6).scale(c).weight().unwrap(), c.abs() * 2);
        }
    }

    #[test]
    fn fan_construction() {
        let f = Fan2::new([(v2(1, 0), 1), (v2(-1, 0), 1)]).unwrap();
        assert_eq!(f.size(), 2);

        let d220 = Fan2::hirzebruch(2, 2, 0).unwrap();
        assert_eq!(d220.size(), 8);
        assert_eq!(d220.multiplicity_of(&v2(0, -1)), 2);

        assert_eq!(
            Fan2::new([(v2(1, 0), 2)]),
            Err(TropError::UnbalancedFan)
        );
        assert_eq!(
            Fan2::new([(v2(0, 0), 1)]),
            Err(TropError::InvalidVector)
        );
    }

    #[test]
    fn fan_canonical_form_is_idempotent() {
        let f = Fan2::new([(v2(0, 1), 1), (v2(0, 1), 2), (v2(0, -1), 3)]).unwrap();
        let again = Fan2::new(f.entries().iter().copied()).unwrap();
        assert_eq!(f, again);
        assert_eq!(f.entries(), &[(v2(0, -1), 3), (v2(0, 1), 3)]);
    }

    #[test]
    fn dual_polygon_of_hirzebruch_fan_is_the_trapezoid() {
        for (a, b, n) in [(1u32, 2u32, 1u32), (2, 2, 0), (3, 1, 2), (1, 0, 0)] {
            let fan = Fan2::hirzebruch(a, b, n).unwrap();
            let poly = fan.dual_polygon().unwrap();
            if a > 0 && b > 0 {
                let expect = vec![
                    v2(0, 0),
                    v2((a * n + b) as i64, 0),
                    v2(b as i64, a as i64),
                    v2(0, a as i64),
                ];
                assert_eq!(poly.vertices(), &expect[..], "delta({a},{b},{n})");
            }
            assert!(poly.is_convex());
        }
        // Degenerate: a single horizontal line gives a vertical unit segment.
        let line = Fan2::hirzebruch(1, 0, 0).unwrap();
        let poly = line.dual_polygon().unwrap();
        assert_eq!(poly.vertices(), &[v2(0, 0), v2(0, 1)]);
        assert!(poly.is_degenerate());
    }

    #[test]
    fn dual_polygon_of_square_fan() {
        // Worked by hand: four directions, each of total weight 2.
        let fan = Fan2::hirzebruch(2, 2, 0).unwrap();
        let poly = fan.dual_polygon().unwrap();
        assert_eq!(
            poly.vertices(),
            &[v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)]
        );
        assert_eq!(poly.interior_lattice_points(), 1);
    }

    #[test]
    fn dual_polygon_edges_reproduce_fan() {
        for (a, b, n) in [(1u32, 1u32, 1u32), (2, 2, 0), (2, 1, 2)] {
            let fan = Fan2::hirzebruch(a, b, n).unwrap();
            let poly = fan.dual_polygon().unwrap();
            assert_eq!(poly.fan().unwrap(), fan);
            let sum = poly
                .edge_vectors()
                .into_iter()
                .fold(v2(0, 0), |s, e| s.add(e));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(-2, 0), 0);
        assert_eq!(multinomial(5, &[2, 3]), 10);
        assert_eq!(multinomial(5, &[2, 2]), 0);
        // Row sums: sum_k C(t,k) = 2^t for t <= 20.
        for t in 0..=20i64 {
            let s: i128 = (0..=t).map(|k| binomial(t, k)).sum();
            assert_eq!(s, 1i128 << t);
        }
        // Recursion from the defining identity of multinomials.
        for t in 0..=8i64 {
            for a in 0..=t {
                for b in 0..=(t - a) {
                    let c = t - a - b;
                    assert_eq!(
                        multinomial(t, &[a, b, c]),
                        binomial(t, c) * multinomial(t - c, &[a, b])
                    );
                }
            }
        }
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), 1);
        assert_eq!(double_factorial(1).unwrap(), 1);
        assert_eq!(double_factorial(3).unwrap(), 3);
        assert_eq!(double_factorial(5).unwrap(), 15);
        assert!(double_factorial(4).is_err());
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn tau() {
        assert_eq!(symmetry_tau(&[1, 1, 2]), 2);
        assert_eq!(symmetry_tau(&[3]), 1);
        assert_eq!(symmetry_tau(&[2, 2, 2]), 6);
        assert_eq!(symmetry_tau(&[]), 1);
    }

    #[test]
    fn gl2z_transform_keeps_balance() {
        let fan = Fan2::hirzebruch(2, 1, 1).unwrap();
        let m = Mat2 { a: 1, b: 1, c: 0, d: 1 };
        assert!(m.is_unimodular());
        let g = fan.transform(&m).unwrap();
        assert_eq!(g.size(), fan.size());
    }
}
