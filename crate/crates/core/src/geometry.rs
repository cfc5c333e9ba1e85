//! Projective planes and spaces over GF(q), biaffine planes, and the
//! t-good point/line sets whose deletion leaves a regular incidence graph.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::graph::{Graph, VertexTag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(u32),
    #[error("operation needs a projective plane")]
    NotAPlane,
    #[error("{0} is not a point of the structure")]
    UnknownPoint(String),
    #[error("{0} is not a line of the structure")]
    UnknownLine(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("deletion set is not {t}-good: {detail}")]
    NotTGood { t: usize, detail: String },
}

/// A point (or, dually, a hyperplane) of PG(n, q) in homogeneous
/// coordinates, scaled so that the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<u32>);

impl ProjPoint {
    pub fn normalized(field: &Field, coords: &[u32]) -> Option<ProjPoint> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let inv = field.inv(lead).expect("nonzero");
        Some(ProjPoint(coords.iter().map(|&c| field.mul(c, inv)).collect()))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

/// Every normalized vector of length `len`, in lexicographic order.
fn projective_points(field: &Field, len: usize) -> Vec<ProjPoint> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in 0..len {
        let free = len - lead - 1;
        let count = (q as u64).pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0u32; len];
            v[lead] = 1;
            let mut rest = idx;
            for c in v[lead + 1..].iter_mut().rev() {
                *c = (rest % q as u64) as u32;
                rest /= q as u64;
            }
            out.push(ProjPoint(v));
        }
    }
    out.sort_unstable();
    out
}

fn dot(field: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// PG(2, q); points and lines are homogeneous triples.
    ProjectivePlane,
    /// Points and hyperplanes of PG(dim, q).
    PointHyperplane { dim: u32 },
    /// Points `[x, y]`, lines `[m, b]` meaning `Y = mX + b`.
    BiaffineType1,
    /// Points `[x, y] != [0, 0]`, lines `[a, b]` meaning `aX + bY + 1 = 0`.
    BiaffineType2,
}

#[derive(Debug, Clone)]
pub struct IncidenceStructure {
    kind: StructureKind,
    field: Arc<Field>,
    points: Vec<Vec<u32>>,
    lines: Vec<Vec<u32>>,
    point_lines: Vec<Vec<usize>>,
    line_points: Vec<Vec<usize>>,
    point_index: HashMap<Vec<u32>, usize>,
    line_index: HashMap<Vec<u32>, usize>,
}

impl IncidenceStructure {
    fn assemble(
        kind: StructureKind,
        field: Arc<Field>,
        points: Vec<Vec<u32>>,
        lines: Vec<Vec<u32>>,
        line_points: Vec<Vec<usize>>,
    ) -> Self {
        let mut point_lines = vec![Vec::new(); points.len()];
        for (l, pts) in line_points.iter().enumerate() {
            for &p in pts {
                point_lines[p].push(l);
            }
        }
        let point_index = points.iter().cloned().zip(0..).collect();
        let line_index = lines.iter().cloned().zip(0..).collect();
        IncidenceStructure {
            kind,
            field,
            points,
            lines,
            point_lines,
            line_points,
            point_index,
            line_index,
        }
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point(&self, i: usize) -> &[u32] {
        &self.points[i]
    }

    pub fn line(&self, i: usize) -> &[u32] {
        &self.lines[i]
    }

    /// Index of a point label; projective labels are normalized first.
    pub fn point_index(&self, label: &[u32]) -> Option<usize> {
        self.point_index.get(&self.canonical_label(label)?).copied()
    }

    pub fn line_index(&self, label: &[u32]) -> Option<usize> {
        self.line_index.get(&self.canonical_label(label)?).copied()
    }

    fn canonical_label(&self, label: &[u32]) -> Option<Vec<u32>> {
        match self.kind {
            StructureKind::ProjectivePlane | StructureKind::PointHyperplane { .. } => {
                ProjPoint::normalized(&self.field, label).map(|p| p.0)
            }
            _ => Some(label.to_vec()),
        }
    }

    /// Lines through a point, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    /// Points on a line, ascending.
    pub fn points_on(&self, l: usize) -> &[usize] {
        &self.line_points[l]
    }

    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.line_points[l].binary_search(&p).is_ok()
    }

    /// The line through two distinct points, when there is exactly one.
    pub fn joining_line(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.point_lines[a]
            .iter()
            .filter(|&&l| self.incident(b, l));
        match (common.next(), common.next()) {
            (Some(&l), None) if a != b => Some(l),
            _ => None,
        }
    }

    /// Number of points on each line, if constant.
    pub fn line_size(&self) -> Option<usize> {
        let first = self.line_points.first()?.len();
        self.line_points
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    /// Full incidence graph: points first, then lines.
    pub fn incidence_graph(&self) -> Graph {
        delete_unchecked(self, &DeletionSet::new(vec![], vec![], 0))
    }
}

pub fn build_pg2(field: Arc<Field>) -> IncidenceStructure {
    build_point_hyperplane(field, 2, StructureKind::ProjectivePlane)
}

/// Points and hyperplanes of PG(dim, q).
pub fn build_pg_hyperplanes(field: Arc<Field>, dim: u32) -> Result<IncidenceStructure, GeometryError> {
    match dim {
        0 | 1 => Err(GeometryError::DimensionTooSmall(dim)),
        2 => Ok(build_pg2(field)),
        _ => Ok(build_point_hyperplane(
            field,
            dim,
            StructureKind::PointHyperplane { dim },
        )),
    }
}

fn build_point_hyperplane(field: Arc<Field>, dim: u32, kind: StructureKind) -> IncidenceStructure {
    let pts = projective_points(&field, dim as usize + 1);
    let line_points: Vec<Vec<usize>> = pts
        .iter()
        .map(|h| {
            pts.iter()
                .enumerate()
                .filter(|(_, p)| dot(&field, &h.0, &p.0) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let labels: Vec<Vec<u32>> = pts.into_iter().map(|p| p.0).collect();
    IncidenceStructure::assemble(kind, field, labels.clone(), labels, line_points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiaffineType {
    /// Removed flag (P, l) is incident: the vertical pencil and the line at infinity.
    One,
    /// Removed pair is the origin and the line at infinity.
    Two,
}

pub fn build_biaffine(field: Arc<Field>, kind: BiaffineType) -> IncidenceStructure {
    let q = field.order();
    let f = &*field;
    match kind {
        BiaffineType::One => {
            let points: Vec<Vec<u32>> = (0..q).flat_map(|x| (0..q).map(move |y| vec![x, y])).collect();
            let lines = points.clone();
            let line_points = lines
                .iter()
                .map(|l| {
                    let (m, b) = (l[0], l[1]);
                    let mut on: Vec<usize> = (0..q)
                        .map(|x| (x * q + f.add(f.mul(m, x), b)) as usize)
                        .collect();
                    on.sort_unstable();
                    on
                })
                .collect();
            IncidenceStructure::assemble(StructureKind::BiaffineType1, field.clone(), points, lines, line_points)
        }
        BiaffineType::Two => {
            let points: Vec<Vec<u32>> = (0..q)
                .flat_map(|x| (0..q).map(move |y| vec![x, y]))
                .skip(1)
                .collect();
            let lines = points.clone();
            // index of (x, y) != (0, 0) is x q + y - 1
            let line_points = lines
                .iter()
                .map(|l| {
                    let (a, b) = (l[0], l[1]);
                    let minus_one = f.neg(1);
                    let mut on: Vec<usize> = if b != 0 {
                        let binv = f.inv(b).unwrap();
                        (0..q)
                            .map(|x| {
                                let y = f.mul(f.sub(minus_one, f.mul(a, x)), binv);
                                (x * q + y - 1) as usize
                            })
                            .collect()
                    } else {
                        let x = f.mul(minus_one, f.inv(a).unwrap());
                        (0..q).map(|y| (x * q + y - 1) as usize).collect()
                    };
                    on.sort_unstable();
                    on
                })
                .collect();
            IncidenceStructure::assemble(StructureKind::BiaffineType2, field.clone(), points, lines, line_points)
        }
    }
}

/// Points `P0` and lines `L0` to delete, with the declared `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionSet {
    pub points: Vec<usize>,
    pub lines: Vec<usize>,
    pub t: usize,
}

impl DeletionSet {
    pub fn new(mut points: Vec<usize>, mut lines: Vec<usize>, t: usize) -> Self {
        points.sort_unstable();
        points.dedup();
        lines.sort_unstable();
        lines.dedup();
        DeletionSet { points, lines, t }
    }

    pub fn with_t(&self, t: usize) -> Self {
        DeletionSet { t, ..self.clone() }
    }
}

fn require_plane(s: &IncidenceStructure) -> Result<(), GeometryError> {
    match s.kind {
        StructureKind::ProjectivePlane => Ok(()),
        _ => Err(GeometryError::NotAPlane),
    }
}

/// Points and lines of the Baer subplane PG(2, sqrt(Q)) inside PG(2, Q).
pub fn baer_deletion_set(plane: &IncidenceStructure) -> Result<DeletionSet, GeometryError> {
    require_plane(plane)?;
    let emb = plane.field().subfield_embedding()?;
    let inside = |label: &Vec<u32>| label.iter().all(|&c| emb.contains(c));
    let points = (0..plane.num_points()).filter(|&i| inside(&plane.points[i])).collect();
    let lines = (0..plane.num_lines()).filter(|&i| inside(&plane.lines[i])).collect();
    Ok(DeletionSet::new(points, lines, 1))
}

/// `L0` = lines through `p1` or `p2`, `P0` = points on `p1 p2` or `e2`.
pub fn flag_deletion_set(
    plane: &IncidenceStructure,
    p1: usize,
    p2: usize,
    e2: usize,
) -> Result<DeletionSet, GeometryError> {
    require_plane(plane)?;
    if p1 == p2 {
        return Err(GeometryError::Degenerate("P1 and P2 coincide"));
    }
    if !plane.incident(p1, e2) {
        return Err(GeometryError::Degenerate("e2 does not pass through P1"));
    }
    let e1 = plane.joining_line(p1, p2).expect("two points of a plane span a line");
    if e1 == e2 {
        return Err(GeometryError::Degenerate("e2 coincides with the line P1P2"));
    }
    let lines = [p1, p2]
        .iter()
        .flat_map(|&p| plane.lines_through(p).iter().copied())
        .collect();
    let points = [e1, e2]
        .iter()
        .flat_map(|&l| plane.points_on(l).iter().copied())
        .collect();
    Ok(DeletionSet::new(points, lines, 2))
}

/// Flag set at `P1 = (1:0:0)`, `P2 = (0:1:0)`, `e2 = [0:1:0]` (second coordinate zero).
pub fn canonical_flag_deletion_set(plane: &IncidenceStructure) -> Result<DeletionSet, GeometryError> {
    let p1 = lookup_point(plane, &[1, 0, 0])?;
    let p2 = lookup_point(plane, &[0, 1, 0])?;
    let e2 = lookup_line(plane, &[0, 1, 0])?;
    flag_deletion_set(plane, p1, p2, e2)
}

/// `L0` = lines through a vertex of the triangle, `P0` = points on a side.
pub fn triangle_deletion_set(
    plane: &IncidenceStructure,
    p1: usize,
    p2: usize,
    p3: usize,
) -> Result<DeletionSet, GeometryError> {
    require_plane(plane)?;
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(GeometryError::Degenerate("triangle vertices coincide"));
    }
    let e3 = plane.joining_line(p1, p2).expect("line");
    if plane.incident(p3, e3) {
        return Err(GeometryError::Degenerate("triangle vertices are collinear"));
    }
    let e1 = plane.joining_line(p2, p3).expect("line");
    let e2 = plane.joining_line(p1, p3).expect("line");
    let lines = [p1, p2, p3]
        .iter()
        .flat_map(|&p| plane.lines_through(p).iter().copied())
        .collect();
    let points = [e1, e2, e3]
        .iter()
        .flat_map(|&l| plane.points_on(l).iter().copied())
        .collect();
    Ok(DeletionSet::new(points, lines, 3))
}

/// Triangle set on the fundamental triangle.
pub fn canonical_triangle_deletion_set(plane: &IncidenceStructure) -> Result<DeletionSet, GeometryError> {
    let p1 = lookup_point(plane, &[1, 0, 0])?;
    let p2 = lookup_point(plane, &[0, 1, 0])?;
    let p3 = lookup_point(plane, &[0, 0, 1])?;
    triangle_deletion_set(plane, p1, p2, p3)
}

/// Points of `X0^(q+1) + X1^(q+1) + X2^(q+1) = 0` in PG(2, q^2) and their
/// tangents `[x0^q : x1^q : x2^q]`.
pub fn hermitian_deletion_set(plane: &IncidenceStructure) -> Result<DeletionSet, GeometryError> {
    require_plane(plane)?;
    let f = plane.field();
    if !f.degree().is_multiple_of(2) {
        return Err(FieldError::NotSquareOrder(f.order()).into());
    }
    let sq = u64::from(f.characteristic()).pow(f.degree() / 2);
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for (i, x) in plane.points.iter().enumerate() {
        let norm = x.iter().fold(0, |acc, &c| f.add(acc, f.pow(c, sq + 1)));
        if norm == 0 {
            points.push(i);
            let tangent: Vec<u32> = x.iter().map(|&c| f.pow(c, sq)).collect();
            lines.push(plane.line_index(&tangent).expect("tangent is a line"));
        }
    }
    Ok(DeletionSet::new(points, lines, sq as usize + 1))
}

fn lookup_point(s: &IncidenceStructure, label: &[u32]) -> Result<usize, GeometryError> {
    s.point_index(label)
        .ok_or_else(|| GeometryError::UnknownPoint(format!("{label:?}")))
}

fn lookup_line(s: &IncidenceStructure, label: &[u32]) -> Result<usize, GeometryError> {
    s.line_index(label)
        .ok_or_else(|| GeometryError::UnknownLine(format!("{label:?}")))
}

/// Checks that every surviving point is on exactly `t` deleted lines and
/// every surviving line carries exactly `t` deleted points.
pub fn verify_t_good(s: &IncidenceStructure, d: &DeletionSet) -> bool {
    t_good_violation(s, d).is_none()
}

fn t_good_violation(s: &IncidenceStructure, d: &DeletionSet) -> Option<String> {
    let mut dead_point = vec![false; s.num_points()];
    let mut dead_line = vec![false; s.num_lines()];
    d.points.iter().for_each(|&p| dead_point[p] = true);
    d.lines.iter().for_each(|&l| dead_line[l] = true);
    for p in (0..s.num_points()).filter(|&p| !dead_point[p]) {
        let hits = s.lines_through(p).iter().filter(|&&l| dead_line[l]).count();
        if hits != d.t {
            return Some(format!("point {:?} lies on {hits} deleted lines", s.points[p]));
        }
    }
    for l in (0..s.num_lines()).filter(|&l| !dead_line[l]) {
        let hits = s.points_on(l).iter().filter(|&&p| dead_point[p]).count();
        if hits != d.t {
            return Some(format!("line {:?} carries {hits} deleted points", s.lines[l]));
        }
    }
    None
}

/// Incidence graph of what survives the deletion: surviving points in
/// structure order, then surviving lines.
pub fn delete_and_graph(s: &IncidenceStructure, d: &DeletionSet) -> Result<Graph, GeometryError> {
    if let Some(detail) = t_good_violation(s, d) {
        return Err(GeometryError::NotTGood { t: d.t, detail });
    }
    Ok(delete_unchecked(s, d))
}

fn delete_unchecked(s: &IncidenceStructure, d: &DeletionSet) -> Graph {
    let np = s.num_points();
    let mut point_id = vec![u32::MAX; np];
    let mut line_id = vec![u32::MAX; s.num_lines()];
    let mut tags = Vec::new();
    let mut dead = vec![false; np];
    d.points.iter().for_each(|&p| dead[p] = true);
    for p in 0..np {
        if !dead[p] {
            point_id[p] = tags.len() as u32;
            tags.push(VertexTag::Point);
        }
    }
    let mut dead = vec![false; s.num_lines()];
    d.lines.iter().for_each(|&l| dead[l] = true);
    for l in 0..s.num_lines() {
        if !dead[l] {
            line_id[l] = tags.len() as u32;
            tags.push(VertexTag::Line);
        }
    }
    let mut edges = Vec::new();
    for (l, &lid) in line_id.iter().enumerate().filter(|(_, &id)| id != u32::MAX) {
        for &p in s.points_on(l) {
            if point_id[p] != u32::MAX {
                edges.push((point_id[p], lid));
            }
        }
    }
    Graph::from_edges(tags.len(), edges, tags).expect("incidence graphs are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(q: u64) -> IncidenceStructure {
        build_pg2(Arc::new(Field::of_order(q).unwrap()))
    }

    #[test]
    fn plane_counts() {
        for (q, n, k) in [(2, 7, 3), (3, 13, 4), (4, 21, 5)] {
            let pg = plane(q);
            assert_eq!(pg.num_points(), n);
            assert_eq!(pg.num_lines(), n);
            assert_eq!(pg.line_size(), Some(k));
            assert!((0..n).all(|p| pg.lines_through(p).len() == k));
        }
    }

    #[test]
    fn plane_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let pg = plane(q);
            let n = pg.num_points();
            for a in 0..n {
                for b in a + 1..n {
                    let common = pg.lines_through(a).iter().filter(|&&l| pg.incident(b, l)).count();
                    assert_eq!(common, 1, "points in PG(2,{q})");
                }
            }
            for l in 0..n {
                for m in l + 1..n {
                    let common = pg.points_on(l).iter().filter(|&&p| pg.incident(p, m)).count();
                    assert_eq!(common, 1, "lines in PG(2,{q})");
                }
            }
        }
    }

    #[test]
    fn hyperplane_counts() {
        let f2 = Arc::new(Field::new(2, 1).unwrap());
        let f3 = Arc::new(Field::new(3, 1).unwrap());
        let s = build_pg_hyperplanes(f2.clone(), 3).unwrap();
        assert_eq!((s.num_points(), s.num_lines(), s.line_size()), (15, 15, Some(7)));
        let s = build_pg_hyperplanes(f3, 3).unwrap();
        assert_eq!((s.num_points(), s.line_size()), (40, Some(13)));
        let s = build_pg_hyperplanes(f2.clone(), 2).unwrap();
        assert_eq!(s.kind(), StructureKind::ProjectivePlane);
        assert_eq!(s.incidence_graph(), build_pg2(f2.clone()).incidence_graph());
        assert_eq!(
            build_pg_hyperplanes(f2, 1).unwrap_err(),
            GeometryError::DimensionTooSmall(1)
        );
    }

    #[test]
    fn baer_sets() {
        for (q, size) in [(4, 7), (9, 13), (16, 21)] {
            let pg = plane(q);
            let d = baer_deletion_set(&pg).unwrap();
            assert_eq!((d.points.len(), d.lines.len()), (size, size));
            assert!(verify_t_good(&pg, &d));
        }
        let pg = plane(4);
        let d = baer_deletion_set(&pg).unwrap();
        let dead: Vec<bool> = (0..21).map(|p| d.points.contains(&p)).collect();
        for l in (0..21).filter(|l| !d.lines.contains(l)) {
            assert_eq!(pg.points_on(l).iter().filter(|&&p| dead[p]).count(), 1);
        }
        assert!(matches!(
            baer_deletion_set(&plane(8)),
            Err(GeometryError::Field(FieldError::NotSquareOrder(8)))
        ));
    }

    #[test]
    fn flag_sets() {
        let pg5 = plane(5);
        let d = canonical_flag_deletion_set(&pg5).unwrap();
        assert_eq!((d.points.len(), d.lines.len()), (11, 11));
        assert!(verify_t_good(&pg5, &d));
        assert!(!verify_t_good(&pg5, &d.with_t(1)));
        let pg4 = plane(4);
        assert!(verify_t_good(&pg4, &canonical_flag_deletion_set(&pg4).unwrap()));

        let p1 = pg5.point_index(&[1, 0, 0]).unwrap();
        let p2 = pg5.point_index(&[0, 1, 0]).unwrap();
        let e1 = pg5.line_index(&[0, 0, 1]).unwrap();
        let far = pg5.line_index(&[1, 0, 0]).unwrap();
        let e2 = pg5.line_index(&[0, 1, 0]).unwrap();
        assert!(flag_deletion_set(&pg5, p1, p1, e2).is_err());
        assert!(flag_deletion_set(&pg5, p1, p2, e1).is_err());
        assert!(flag_deletion_set(&pg5, p1, p2, far).is_err());
    }

    #[test]
    fn triangle_sets() {
        for (q, size) in [(5, 15), (7, 21)] {
            let pg = plane(q);
            let d = canonical_triangle_deletion_set(&pg).unwrap();
            assert_eq!((d.points.len(), d.lines.len()), (size, size));
            assert!(verify_t_good(&pg, &d));
        }
        let pg = plane(5);
        let a = pg.point_index(&[1, 0, 0]).unwrap();
        let b = pg.point_index(&[0, 1, 0]).unwrap();
        let c = pg.point_index(&[1, 1, 0]).unwrap();
        assert_eq!(
            triangle_deletion_set(&pg, a, b, c).unwrap_err(),
            GeometryError::Degenerate("triangle vertices are collinear")
        );
    }

    #[test]
    fn hermitian_sets() {
        let pg4 = plane(4);
        let d = hermitian_deletion_set(&pg4).unwrap();
        assert_eq!((d.points.len(), d.lines.len(), d.t), (9, 9, 3));
        assert!(verify_t_good(&pg4, &d));

        let pg9 = plane(9);
        let d = hermitian_deletion_set(&pg9).unwrap();
        assert_eq!((d.points.len(), d.lines.len()), (28, 28));
        let on_curve: Vec<bool> = (0..91).map(|p| d.points.contains(&p)).collect();
        for l in 0..91 {
            let meet = pg9.points_on(l).iter().filter(|&&p| on_curve[p]).count();
            if d.lines.contains(&l) {
                assert_eq!(meet, 1);
            } else {
                assert_eq!(meet, 4);
            }
        }
        assert!(verify_t_good(&pg9, &d));
    }

    #[test]
    fn biaffine_counts() {
        for (q, kind, n) in [
            (5, BiaffineType::One, 25),
            (5, BiaffineType::Two, 24),
            (4, BiaffineType::One, 16),
            (9, BiaffineType::Two, 80),
        ] {
            let b = build_biaffine(Arc::new(Field::of_order(q).unwrap()), kind);
            assert_eq!((b.num_points(), b.num_lines()), (n, n));
            assert_eq!(b.line_size(), Some(q as usize));
            assert!((0..n).all(|p| b.lines_through(p).len() == q as usize));
            // two points share at most one line
            let g = b.incidence_graph();
            assert!(crate::graph::girth(&g).unwrap() >= 6);
        }
    }

    #[test]
    fn deletion_graphs() {
        let pg4 = plane(4);
        let g = delete_and_graph(&pg4, &baer_deletion_set(&pg4).unwrap()).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (28, Some(4)));

        let pg5 = plane(5);
        let g = delete_and_graph(&pg5, &canonical_flag_deletion_set(&pg5).unwrap()).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (40, Some(4)));
        let g = delete_and_graph(&pg5, &canonical_triangle_deletion_set(&pg5).unwrap()).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (32, Some(3)));
        assert!(g.tags()[..16].iter().all(|&t| t == VertexTag::Point));
        assert!(g.tags()[16..].iter().all(|&t| t == VertexTag::Line));

        let bad = canonical_flag_deletion_set(&pg5).unwrap().with_t(1);
        assert!(matches!(
            delete_and_graph(&pg5, &bad),
            Err(GeometryError::NotTGood { t: 1, .. })
        ));
    }
}
