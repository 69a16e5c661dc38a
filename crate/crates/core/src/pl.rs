//! Piecewise-linear bookkeeping for simplicial complexes: combinatorial
//! boundaries, Euler characteristics, exact sphere/ball recognition in
//! dimensions ≤ 2, certified joins, neat ball/boundary pairs and their
//! composition, and the iterated-wedge construction.
//!
//! Recognition above dimension 2 is intentionally out of reach; higher
//! claims are only ever produced by certificate propagation (joins of
//! certified complexes, compositions of neat pairs), and every certificate
//! whose dimension lands back in the decidable range is re-checked.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::join_operad::{join_compose, local_op, LocalOp};
use crate::pair::RelativePair;
use crate::scpx_operads::{wed_vertex, NamedComplex};

/// Boundary of a pure complex: the downward closure of the codimension-1
/// faces lying in exactly one facet.
///
/// Requires a pure complex of dimension ≥ 0 in which every codimension-1
/// face lies in at most two facets.
pub fn combinatorial_boundary(k_cx: &SimplicialComplex) -> Result<SimplicialComplex> {
    let dim = match k_cx.dimension() {
        Some(d) if d >= 0 => d,
        _ => {
            return Err(Error::domain(
                "combinatorial boundary needs a complex of dimension ≥ 0",
            ))
        }
    };
    if !k_cx.is_pure() {
        return Err(Error::domain("combinatorial boundary needs a pure complex"));
    }
    let facets = k_cx.facets();
    let ridge_size = dim as u32; // faces of dimension dim−1 have this many vertices
    let mut boundary_ridges = Vec::new();
    for ridge in k_cx.family().masks() {
        if ridge.count_ones() != ridge_size {
            continue;
        }
        let count = facets.masks().iter().filter(|&&f| ridge & !f == 0).count();
        match count {
            0 | 1 => {
                if count == 1 {
                    boundary_ridges.push(*ridge);
                }
            }
            2 => {}
            _ => {
                return Err(Error::domain(format!(
                    "codimension-1 face {ridge:#b} lies in {count} facets"
                )))
            }
        }
    }
    let fam = Family::from_masks_unchecked(k_cx.ambient(), boundary_ridges)
        .closure(crate::family::ClosureMode::Down)?;
    Ok(SimplicialComplex::from_family_unchecked(fam))
}

/// `Σ (−1)^{dim I}` over the nonempty faces. The empty complex has no
/// Euler characteristic.
pub fn euler_characteristic(k_cx: &SimplicialComplex) -> Result<i64> {
    if k_cx.is_empty() {
        return Err(Error::domain("Euler characteristic of the empty complex"));
    }
    Ok(k_cx
        .family()
        .masks()
        .iter()
        .filter(|m| **m != 0)
        .map(|m| if m.count_ones() % 2 == 1 { 1 } else { -1 })
        .sum())
}

/// Verdict of the low-dimensional recognizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognition {
    Sphere(i64),
    Ball(i64),
    Other,
}

impl std::fmt::Display for Recognition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Recognition::Sphere(d) => write!(f, "sphere({d})"),
            Recognition::Ball(d) => write!(f, "ball({d})"),
            Recognition::Other => write!(f, "other"),
        }
    }
}

fn degrees(k_cx: &SimplicialComplex) -> Vec<(usize, usize)> {
    // (vertex, number of edges through it) over non-ghost vertices
    k_cx.vertices()
        .into_iter()
        .map(|v| {
            let bit = 1u32 << (v - 1);
            let deg = k_cx
                .family()
                .masks()
                .iter()
                .filter(|m| m.count_ones() == 2 && *m & bit != 0)
                .count();
            (v, deg)
        })
        .collect()
}

fn is_connected(k_cx: &SimplicialComplex) -> bool {
    let verts = k_cx.vertices();
    if verts.len() <= 1 {
        return true;
    }
    let mut reached = vec![false; k_cx.ambient() + 1];
    let mut stack = vec![verts[0]];
    reached[verts[0]] = true;
    while let Some(v) = stack.pop() {
        let bit = 1u32 << (v - 1);
        for m in k_cx.family().masks() {
            if m.count_ones() == 2 && m & bit != 0 {
                let other = (m & !bit).trailing_zeros() as usize + 1;
                if !reached[other] {
                    reached[other] = true;
                    stack.push(other);
                }
            }
        }
    }
    verts.into_iter().all(|v| reached[v])
}

/// Exact sphere/ball recognition for complexes of dimension ≤ 2 (ghost
/// vertices ignored; dimensions above 2 are a domain error).
///
/// Dimension −1: the trivial complex `{∅}` is the (−1)-sphere.
/// Dimension 0: a sphere is two isolated vertices, a ball one.
/// Dimension 1: a sphere is a single cycle, a ball a single path.
/// Dimension 2: pure and connected with every edge in at most two
/// triangles and every vertex link a cycle or path; a sphere closes up
/// every edge with `χ = 2`, a ball has one boundary cycle and `χ = 1`.
pub fn recognize_low_dim(k_cx: &SimplicialComplex) -> Result<Recognition> {
    let dim = match k_cx.dimension() {
        None => return Ok(Recognition::Other),
        Some(d) => d,
    };
    if dim > 2 {
        return Err(Error::domain(format!(
            "recognition is exact only up to dimension 2, got {dim}"
        )));
    }
    Ok(match dim {
        -1 => Recognition::Sphere(-1),
        0 => {
            let n = k_cx.vertices().len();
            match n {
                1 => Recognition::Ball(0),
                2 => Recognition::Sphere(0),
                _ => Recognition::Other,
            }
        }
        1 => recognize_graph(k_cx),
        _ => recognize_surface(k_cx),
    })
}

fn recognize_graph(k_cx: &SimplicialComplex) -> Recognition {
    if !k_cx.is_pure() || !is_connected(k_cx) {
        return Recognition::Other;
    }
    let degs = degrees(k_cx);
    let chi = euler_characteristic(k_cx).expect("nonempty");
    let all_two = degs.iter().all(|&(_, d)| d == 2);
    let endpoints = degs.iter().filter(|&&(_, d)| d == 1).count();
    let inner_ok = degs.iter().all(|&(_, d)| d == 1 || d == 2);
    if all_two && chi == 0 {
        Recognition::Sphere(1)
    } else if inner_ok && endpoints == 2 && chi == 1 {
        Recognition::Ball(1)
    } else {
        Recognition::Other
    }
}

fn recognize_surface(k_cx: &SimplicialComplex) -> Recognition {
    if !k_cx.is_pure() || !is_connected(k_cx) {
        return Recognition::Other;
    }
    // every edge lies in one or two triangles
    let mut boundary_edges = Vec::new();
    for m in k_cx.family().masks() {
        if m.count_ones() != 2 {
            continue;
        }
        let count = k_cx
            .family()
            .masks()
            .iter()
            .filter(|t| t.count_ones() == 3 && *m & !*t == 0)
            .count();
        match count {
            1 => boundary_edges.push(*m),
            2 => {}
            _ => return Recognition::Other,
        }
    }
    // every vertex link must be a circle (interior) or a path (boundary)
    for v in k_cx.vertices() {
        let link = local_op(k_cx, v, LocalOp::Link).expect("vertex in range");
        match recognize_low_dim(&link) {
            Ok(Recognition::Sphere(1)) | Ok(Recognition::Ball(1)) => {}
            _ => return Recognition::Other,
        }
    }
    let chi = euler_characteristic(k_cx).expect("nonempty");
    if boundary_edges.is_empty() && chi == 2 {
        return Recognition::Sphere(2);
    }
    if !boundary_edges.is_empty() && chi == 1 {
        // the boundary edges must form a single cycle
        let boundary = SimplicialComplex::from_family_unchecked(
            Family::from_masks_unchecked(k_cx.ambient(), boundary_edges)
                .closure(crate::family::ClosureMode::Down)
                .expect("within cap"),
        );
        if recognize_graph(&boundary) == Recognition::Sphere(1) {
            return Recognition::Ball(2);
        }
    }
    Recognition::Other
}

/// The claim carried by a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlClaim {
    Sphere(i64),
    Ball(i64),
    Unknown,
}

impl std::fmt::Display for PlClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlClaim::Sphere(d) => write!(f, "sphere({d})"),
            PlClaim::Ball(d) => write!(f, "ball({d})"),
            PlClaim::Unknown => write!(f, "unknown"),
        }
    }
}

/// The construction history backing a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `Δ_[a]` is an `(a−1)`-ball.
    SimplexBall(usize),
    /// `∂Δ_[a]` is an `(a−2)`-sphere.
    BoundarySphere(usize),
    /// Verdict of the dimension ≤ 2 recognizer.
    Recognized,
    /// Join of two certified complexes.
    Join(Box<PlCertificate>, Box<PlCertificate>),
    /// Neat composition at a slot.
    NeatComposition {
        left: Box<PlCertificate>,
        slot: usize,
        right: Box<PlCertificate>,
    },
    /// Iterated wedge of a certified sphere.
    IteratedWedge(Box<PlCertificate>, Vec<usize>),
}

/// A sphere/ball claim together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlCertificate {
    pub claim: PlClaim,
    pub provenance: Provenance,
}

impl PlCertificate {
    pub fn simplex_ball(a: usize) -> Self {
        PlCertificate {
            claim: PlClaim::Ball(a as i64 - 1),
            provenance: Provenance::SimplexBall(a),
        }
    }

    pub fn boundary_sphere(a: usize) -> Self {
        PlCertificate {
            claim: PlClaim::Sphere(a as i64 - 2),
            provenance: Provenance::BoundarySphere(a),
        }
    }

    pub fn recognized(r: Recognition) -> Self {
        let claim = match r {
            Recognition::Sphere(d) => PlClaim::Sphere(d),
            Recognition::Ball(d) => PlClaim::Ball(d),
            Recognition::Other => PlClaim::Unknown,
        };
        PlCertificate {
            claim,
            provenance: Provenance::Recognized,
        }
    }

    /// Propagation through the join: `ball(p) ∗ ball(q) = ball(p+q+1)`,
    /// `ball(p) ∗ sphere(q) = ball(p+q+1)`, `sphere(p) ∗ sphere(q) =
    /// sphere(p+q+1)`.
    pub fn join(&self, other: &PlCertificate) -> PlCertificate {
        let claim = match (self.claim, other.claim) {
            (PlClaim::Ball(p), PlClaim::Ball(q)) => PlClaim::Ball(p + q + 1),
            (PlClaim::Ball(p), PlClaim::Sphere(q)) => PlClaim::Ball(p + q + 1),
            (PlClaim::Sphere(p), PlClaim::Ball(q)) => PlClaim::Ball(p + q + 1),
            (PlClaim::Sphere(p), PlClaim::Sphere(q)) => PlClaim::Sphere(p + q + 1),
            _ => PlClaim::Unknown,
        };
        PlCertificate {
            claim,
            provenance: Provenance::Join(Box::new(self.clone()), Box::new(other.clone())),
        }
    }

    fn render(&self, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        out.push_str(&format!("{pad}{}", self.claim));
        match &self.provenance {
            Provenance::SimplexBall(a) => out.push_str(&format!(" [simplex on [{a}]]\n")),
            Provenance::BoundarySphere(a) => {
                out.push_str(&format!(" [boundary of the simplex on [{a}]]\n"))
            }
            Provenance::Recognized => out.push_str(" [recognizer]\n"),
            Provenance::Join(a, b) => {
                out.push_str(" [join]\n");
                a.render(indent + 1, out);
                b.render(indent + 1, out);
            }
            Provenance::NeatComposition { left, slot, right } => {
                out.push_str(&format!(" [neat composition at slot {slot}]\n"));
                left.render(indent + 1, out);
                right.render(indent + 1, out);
            }
            Provenance::IteratedWedge(base, js) => {
                out.push_str(&format!(" [iterated wedge, multiplicities {js:?}]\n"));
                base.render(indent + 1, out);
            }
        }
    }
}

impl std::fmt::Display for PlCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        write!(f, "{}", s.trim_end())
    }
}

/// A ball with its boundary sphere, no interior vertices, and a
/// certificate for each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeatPair {
    pair: RelativePair,
    ball_dim: i64,
    certificate: PlCertificate,
}

impl NeatPair {
    /// `(Δ_[a], ∂Δ_[a])`, the generating family of examples (for `a = 1`
    /// this is the operad unit `(pt, {∅})`).
    pub fn simplex(a: usize) -> Result<NeatPair> {
        if a == 0 {
            return Err(Error::domain("neat simplex pair needs a ≥ 1"));
        }
        let total = NamedComplex::Simplex(a).realize()?;
        let sub = NamedComplex::BoundarySimplex(a).realize()?;
        Ok(NeatPair {
            pair: RelativePair::new(total, sub)?,
            ball_dim: a as i64 - 1,
            certificate: PlCertificate::simplex_ball(a),
        })
    }

    /// Validates an arbitrary pair as a neat pair. The sub component must
    /// be the combinatorial boundary of the total, no non-ghost vertex may
    /// be interior (dimension 0 excepted, where the boundary is `{∅}`), and
    /// the recognizer must confirm ball and sphere, which confines this
    /// constructor to total dimension ≤ 2. Higher-dimensional neat pairs
    /// arise from [`NeatPair::simplex`] and [`neat_compose`].
    pub fn from_pair(pair: RelativePair) -> Result<NeatPair> {
        let dim = match pair.total().dimension() {
            Some(d) if d >= 0 => d,
            _ => return Err(Error::domain("a neat pair needs a nonempty ball")),
        };
        check_neat(&pair, dim)?;
        if dim > 2 {
            return Err(Error::domain(
                "cannot certify a ball of dimension > 2 from scratch",
            ));
        }
        match recognize_low_dim(pair.total())? {
            Recognition::Ball(d) if d == dim => {}
            other => {
                return Err(Error::domain(format!(
                    "total does not recognize as a {dim}-ball (got {other})"
                )))
            }
        }
        Ok(NeatPair {
            pair,
            ball_dim: dim,
            certificate: PlCertificate::recognized(Recognition::Ball(dim)),
        })
    }

    pub fn pair(&self) -> &RelativePair {
        &self.pair
    }

    pub fn ball(&self) -> &SimplicialComplex {
        self.pair.total()
    }

    pub fn boundary(&self) -> &SimplicialComplex {
        self.pair.sub()
    }

    pub fn ball_dim(&self) -> i64 {
        self.ball_dim
    }

    pub fn certificate(&self) -> &PlCertificate {
        &self.certificate
    }

    pub fn ambient(&self) -> usize {
        self.pair.ambient()
    }
}

fn check_neat(pair: &RelativePair, dim: i64) -> Result<()> {
    let boundary = combinatorial_boundary(pair.total())?;
    if &boundary != pair.sub() {
        return Err(Error::domain(
            "sub component is not the combinatorial boundary of the total",
        ));
    }
    if dim > 0 {
        for v in pair.total().vertices() {
            if pair.sub().is_ghost(v) {
                return Err(Error::domain(format!("interior vertex {v}")));
            }
        }
    }
    Ok(())
}

/// Join composition of neat pairs with certificate propagation: composing a
/// `p`-ball pair with a `q`-ball pair yields a `(p+q)`-ball pair whose
/// boundary is certified as a `(p+q−1)`-sphere.
///
/// The certified claims are re-checked on the result: the sub component
/// must be the combinatorial boundary of the total, no interior vertices
/// may appear, and when the result dimension is ≤ 2 the recognizer must
/// agree. A failure of these checks is an internal error.
pub fn neat_compose(p: &NeatPair, slot: usize, q: &NeatPair) -> Result<NeatPair> {
    let composed = join_compose(&p.pair, slot, &q.pair)?;
    let ball_dim = p.ball_dim + q.ball_dim;
    let certificate = PlCertificate {
        claim: PlClaim::Ball(ball_dim),
        provenance: Provenance::NeatComposition {
            left: Box::new(p.certificate.clone()),
            slot,
            right: Box::new(q.certificate.clone()),
        },
    };
    if composed.total().dimension() != Some(ball_dim) {
        return Err(Error::internal(format!(
            "neat composition produced dimension {:?}, expected {ball_dim}",
            composed.total().dimension()
        )));
    }
    check_neat(&composed, ball_dim).map_err(|e| Error::internal(e.to_string()))?;
    if ball_dim <= 2 {
        match recognize_low_dim(composed.total())? {
            Recognition::Ball(d) if d == ball_dim => {}
            other => {
                return Err(Error::internal(format!(
                    "recognizer disagrees with the neat certificate: {other}"
                )))
            }
        }
        match recognize_low_dim(composed.sub())? {
            Recognition::Sphere(d) if d == ball_dim - 1 => {}
            other => {
                return Err(Error::internal(format!(
                    "recognizer disagrees with the boundary certificate: {other}"
                )))
            }
        }
    }
    Ok(NeatPair {
        pair: composed,
        ball_dim,
        certificate,
    })
}

/// The iterated-wedge construction: at each slot `i` (processed right to
/// left so indices stay stable), applies `J_i − 1` wedges. The result lives
/// on `[Σ J_i]` vertices and has dimension `dim K + Σ (J_i − 1)`.
pub fn j_construction(k_cx: &SimplicialComplex, j: &[usize]) -> Result<SimplicialComplex> {
    if j.len() != k_cx.ambient() {
        return Err(Error::domain(format!(
            "multiplicity vector of length {} for a complex on [{}]",
            j.len(),
            k_cx.ambient()
        )));
    }
    if j.contains(&0) {
        return Err(Error::domain("multiplicities must be ≥ 1"));
    }
    let mut out = k_cx.clone();
    for i in (1..=k_cx.ambient()).rev() {
        for _ in 1..j[i - 1] {
            out = wed_vertex(&out, i)?;
        }
    }
    Ok(out)
}

/// [`j_construction`] together with the propagated sphere certificate.
pub fn j_construction_certified(
    k_cx: &SimplicialComplex,
    base: &PlCertificate,
    j: &[usize],
) -> Result<(SimplicialComplex, PlCertificate)> {
    let out = j_construction(k_cx, j)?;
    let wedges: i64 = j.iter().map(|&ji| ji as i64 - 1).sum();
    let claim = match base.claim {
        PlClaim::Sphere(d) => PlClaim::Sphere(d + wedges),
        _ => PlClaim::Unknown,
    };
    let certificate = PlCertificate {
        claim,
        provenance: Provenance::IteratedWedge(Box::new(base.clone()), j.to_vec()),
    };
    Ok((out, certificate))
}
