//! Periodic triangular clusters.
//!
//! A cluster is the quotient of the infinite triangular lattice by the
//! superlattice spanned by `T1 = a*a1 + b*a2` and `T2 = -b*a1 + (a+b)*a2`,
//! where `a1 = (1,0)` and `a2 = (1/2, sqrt(3)/2)` are the primitive
//! vectors (lattice constant 1). The cell holds `N = a^2 + a*b + b^2`
//! sites; `(a,b) = (3,2)` gives the 19-site cluster with full sixfold
//! symmetry.
//!
//! Besides site positions the cluster carries everything the Hamiltonian
//! and the observables need: the nearest-neighbor bond list with one
//! in-plane DMI unit vector per bond, the set of non-overlapping
//! up-triangle plaquettes used by the scalar chirality, and the cluster's
//! reciprocal-space data (the N allowed momenta and the Brillouin-zone
//! bounding box for dense structure-factor maps).

use std::f64::consts::PI;
use std::io::{self, Write};
use thiserror::Error;

/// In-plane vector in lattice-constant units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product of two in-plane vectors.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(s * self.x, s * self.y)
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Nearest-neighbor bond. `d_vec` is the in-plane DMI unit vector for the
/// ordered pair `(i, j)`: `z_hat x e_ij` with `e_ij` the unit displacement
/// from `i` to `j` along this bond's periodic image.
#[derive(Debug, Clone, Copy)]
pub struct Bond {
    pub i: usize,
    pub j: usize,
    pub d_vec: Vec2,
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid tilt ({a}, {b}): need a >= 1, b >= 0 and a^2+ab+b^2 >= 3, got N = {n}")]
    InvalidTilt { a: i64, b: i64, n: i64 },
    #[error("momentum grid resolution must be >= 2, got {0}")]
    BadResolution(usize),
    #[error("site index {index} out of range for {n_sites} sites")]
    SiteOutOfRange { index: usize, n_sites: usize },
}

/// Periodic triangular cluster. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Cluster {
    pub n_sites: usize,
    pub tilt: (i64, i64),
    pub positions: Vec<Vec2>,
    pub bonds: Vec<Bond>,
    /// Counter-clockwise up-triangles, one per site; pairwise area-disjoint.
    pub plaquettes: Vec<[usize; 3]>,
    pub center_site: usize,
    pub translation_vectors: [Vec2; 2],
    /// The N reciprocal points of the cluster, folded to minimum norm,
    /// sorted by (norm, x, y). The Gamma point is first.
    pub allowed_momenta: Vec<Vec2>,
}

const A1: Vec2 = Vec2 { x: 1.0, y: 0.0 };
const A2: Vec2 = Vec2 {
    x: 0.5,
    y: 0.866_025_403_784_438_6,
};

/// The six nearest-neighbor directions in integer (u, v) coordinates.
const NEIGHBOR_DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn cartesian(u: i64, v: i64) -> Vec2 {
    A1.scale(u as f64) + A2.scale(v as f64)
}

fn floor_div(n: i64, d: i64) -> i64 {
    let q = n / d;
    if n % d != 0 && (n < 0) != (d < 0) {
        q - 1
    } else {
        q
    }
}

/// Integer-lattice data of the tilted cell; only needed during construction.
struct Cell {
    a: i64,
    b: i64,
    n: i64,
}

impl Cell {
    /// Canonical coset representative of `(u, v)` modulo the superlattice,
    /// the unique image with fractional coordinates in `[0, 1)^2`.
    fn canonical(&self, u: i64, v: i64) -> (i64, i64) {
        let (a, b, n) = (self.a, self.b, self.n);
        // N * (fractional coords) via the adjugate of [[a, -b], [b, a+b]].
        let s1 = (a + b) * u + b * v;
        let s2 = -b * u + a * v;
        let m1 = floor_div(s1, n);
        let m2 = floor_div(s2, n);
        (u - (m1 * a - m2 * b), v - (m1 * b + m2 * (a + b)))
    }
}

/// Build the periodic triangular cluster for tilt `(a, b)`.
///
/// Site 0 sits at the origin. Each physical nearest-neighbor link appears
/// exactly once in the bond list (small cells connect the same site pair
/// through several periodic images, and each image is its own bond), so
/// every site has six incident bonds and `|bonds| = 3N`.
pub fn build_cluster(a: i64, b: i64) -> Result<Cluster, LatticeError> {
    let n = a * a + a * b + b * b;
    if a < 1 || b < 0 || n < 3 {
        return Err(LatticeError::InvalidTilt { a, b, n });
    }
    let cell = Cell { a, b, n };
    let n = n as usize;

    // Enumerate canonical representatives. The box is generous; canonical
    // folding collapses it onto exactly N cosets.
    let r = a + b + 2;
    let mut reps: Vec<(i64, i64)> = Vec::new();
    for u in -r..=r {
        for v in -r..=r {
            let c = cell.canonical(u, v);
            if !reps.contains(&c) {
                reps.push(c);
            }
        }
    }
    assert_eq!(reps.len(), n, "coset enumeration must yield N sites");
    // Deterministic site order with the origin first.
    reps.sort_by_key(|&(u, v)| (v, u));
    assert_eq!(reps[0], (0, 0));

    let index_of = |uv: (i64, i64)| -> usize {
        reps.iter().position(|&r| r == uv).expect("canonical rep")
    };

    let positions: Vec<Vec2> = reps.iter().map(|&(u, v)| cartesian(u, v)).collect();

    // Bonds: each link enumerated from both endpoints; keep it from the
    // lower-indexed one so it appears once.
    let mut bonds = Vec::with_capacity(3 * n);
    for (si, &(u, v)) in reps.iter().enumerate() {
        for &(du, dv) in &NEIGHBOR_DIRS {
            let sj = index_of(cell.canonical(u + du, v + dv));
            if si < sj {
                let e = cartesian(du, dv); // unit by construction
                bonds.push(Bond {
                    i: si,
                    j: sj,
                    d_vec: Vec2::new(-e.y, e.x), // z_hat x e
                });
            }
        }
    }
    assert_eq!(bonds.len(), 3 * n, "triangular coordination is six");

    // One up-triangle per site, counter-clockwise: (r, r + a1, r + a2).
    let plaquettes: Vec<[usize; 3]> = reps
        .iter()
        .enumerate()
        .map(|(si, &(u, v))| {
            [
                si,
                index_of(cell.canonical(u + 1, v)),
                index_of(cell.canonical(u, v + 1)),
            ]
        })
        .collect();

    let translation_vectors = [
        A1.scale(a as f64) + A2.scale(b as f64),
        A1.scale(-b as f64) + A2.scale((a + b) as f64),
    ];

    let allowed_momenta = cluster_momenta(cell.a, cell.b, &translation_vectors);
    assert_eq!(allowed_momenta.len(), n);

    let mut cluster = Cluster {
        n_sites: n,
        tilt: (a, b),
        positions,
        bonds,
        plaquettes,
        center_site: 0,
        translation_vectors,
        allowed_momenta,
    };
    cluster.center_site = centroid_site(&cluster);
    Ok(cluster)
}

/// Minimum-image fold of a raw difference vector; ties resolved by the
/// lexicographically smallest (x, y).
fn fold_min_image(d: Vec2, tvecs: &[Vec2; 2]) -> Vec2 {
    let mut best = d;
    let mut best_n = d.dot(d);
    for m1 in -2..=2 {
        for m2 in -2..=2 {
            let c = d + tvecs[0].scale(m1 as f64) + tvecs[1].scale(m2 as f64);
            let cn = c.dot(c);
            if cn < best_n - 1e-12
                || ((cn - best_n).abs() <= 1e-12
                    && (c.x, c.y) < (best.x, best.y))
            {
                best = c;
                best_n = cn;
            }
        }
    }
    best
}

fn centroid_site(c: &Cluster) -> usize {
    let mut centroid = Vec2::ZERO;
    for p in &c.positions {
        centroid = centroid + *p;
    }
    centroid = centroid.scale(1.0 / c.n_sites as f64);
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, p) in c.positions.iter().enumerate() {
        let d = fold_min_image(*p - centroid, &c.translation_vectors).norm();
        if d < best_d - 1e-12 {
            best = i;
            best_d = d;
        }
    }
    best
}

/// Reciprocal basis of the primitive triangular lattice (b_i . a_j = 2 pi d_ij).
fn reciprocal_basis() -> [Vec2; 2] {
    let det = A1.cross(A2);
    let s = 2.0 * PI / det;
    [
        Vec2::new(A2.y * s, -A2.x * s),
        Vec2::new(-A1.y * s, A1.x * s),
    ]
}

fn cluster_momenta(a: i64, b: i64, _tvecs: &[Vec2; 2]) -> Vec<Vec2> {
    let n = a * a + a * b + b * b;
    let [b1, b2] = reciprocal_basis();
    let mut seen: Vec<(i64, i64)> = Vec::new();
    let mut momenta: Vec<Vec2> = Vec::new();
    for n1 in 0..n {
        for n2 in 0..n {
            // N * (fractional coords in the b-basis) of n1*G1 + n2*G2.
            let s1 = ((a + b) * n1 - b * n2).rem_euclid(n);
            let s2 = (b * n1 + a * n2).rem_euclid(n);
            if seen.contains(&(s1, s2)) {
                continue;
            }
            seen.push((s1, s2));
            let q0 = b1.scale(s1 as f64 / n as f64) + b2.scale(s2 as f64 / n as f64);
            momenta.push(fold_min_image(q0, &[b1, b2]));
        }
    }
    momenta.sort_by(|p, q| {
        let (np, nq) = (p.norm(), q.norm());
        np.partial_cmp(&nq)
            .unwrap()
            .then(p.x.partial_cmp(&q.x).unwrap())
            .then(p.y.partial_cmp(&q.y).unwrap())
    });
    momenta
}

impl Cluster {
    /// Minimum-image displacement `r_j - r_i`. Antisymmetric by
    /// construction: the fold is evaluated for the index-ordered pair and
    /// negated when `i > j`, so tie-breaking cannot break the sign rule.
    pub fn displacement(&self, i: usize, j: usize) -> Result<Vec2, LatticeError> {
        for &s in &[i, j] {
            if s >= self.n_sites {
                return Err(LatticeError::SiteOutOfRange {
                    index: s,
                    n_sites: self.n_sites,
                });
            }
        }
        if i == j {
            return Ok(Vec2::ZERO);
        }
        let (lo, hi, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
        let d = fold_min_image(
            self.positions[hi] - self.positions[lo],
            &self.translation_vectors,
        );
        Ok(d.scale(sign))
    }

    /// Uniform grid over the bounding box of the first Brillouin zone of
    /// the underlying triangular lattice (a hexagon with corner radius
    /// 4 pi / 3). Returns `resolution^2` points including the box corners.
    pub fn momentum_grid(&self, resolution: usize) -> Result<Vec<Vec2>, LatticeError> {
        if resolution < 2 {
            return Err(LatticeError::BadResolution(resolution));
        }
        let r = 4.0 * PI / 3.0;
        let corners: Vec<Vec2> = (0..6)
            .map(|k| {
                let t = PI * k as f64 / 3.0;
                Vec2::new(r * t.cos(), r * t.sin())
            })
            .collect();
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for c in &corners {
            xmin = xmin.min(c.x);
            xmax = xmax.max(c.x);
            ymin = ymin.min(c.y);
            ymax = ymax.max(c.y);
        }
        let step = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (resolution - 1) as f64;
        let mut grid = Vec::with_capacity(resolution * resolution);
        for iy in 0..resolution {
            for ix in 0..resolution {
                grid.push(Vec2::new(step(xmin, xmax, ix), step(ymin, ymax, iy)));
            }
        }
        Ok(grid)
    }

    /// Plain-text description for debugging: one record per line.
    pub fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "cluster {} {} {}", self.tilt.0, self.tilt.1, self.n_sites)?;
        for t in &self.translation_vectors {
            writeln!(w, "tvec {} {}", t.x, t.y)?;
        }
        for (i, p) in self.positions.iter().enumerate() {
            writeln!(w, "site {} {} {}", i, p.x, p.y)?;
        }
        for b in &self.bonds {
            writeln!(w, "bond {} {} {} {}", b.i, b.j, b.d_vec.x, b.d_vec.y)?;
        }
        for p in &self.plaquettes {
            writeln!(w, "plaq {} {} {}", p[0], p[1], p[2])?;
        }
        for q in &self.allowed_momenta {
            writeln!(w, "momentum {} {}", q.x, q.y)?;
        }
        Ok(())
    }
}
