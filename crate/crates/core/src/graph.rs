//! Finite simple graphs, clique enumeration, weights, and boundary
//! structure.
//!
//! Cliques are the index sets for everything downstream: a `k`-clique is a
//! set of `k` mutually adjacent vertices, stored in strictly ascending
//! order. That ascending order is the canonical orientation; all stored
//! form values are relative to it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::Error;

pub type VertexId = u32;

/// Finite simple graph: no loops, no multi-edges.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: HashMap<VertexId, Vec<VertexId>>,
}

impl Graph {
    pub fn new(
        mut vertices: Vec<VertexId>,
        raw_edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, Error> {
        vertices.sort_unstable();
        for pair in vertices.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex { vertex: pair[0] });
            }
        }
        let vertex_set: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b) in raw_edges {
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !vertex_set.contains(&u) || !vertex_set.contains(&v) {
                return Err(Error::UnknownEndpoint { u, v });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge { u, v });
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        let mut adjacency: HashMap<VertexId, Vec<VertexId>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &edges {
            adjacency.get_mut(&u).unwrap().push(v);
            adjacency.get_mut(&v).unwrap().push(u);
        }
        for list in adjacency.values_mut() {
            list.sort_unstable();
        }
        Ok(Graph {
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adjacency.get(&v).map(|l| l.as_slice()).unwrap_or(&[])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// The indicator `1_G`: true iff the vertices are distinct and pairwise
    /// adjacent.
    pub fn is_clique(&self, verts: &[VertexId]) -> bool {
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                if !self.has_edge(verts[i], verts[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A `k`-clique in canonical orientation: strictly ascending vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    verts: Vec<VertexId>,
}

impl Clique {
    /// Wraps an already strictly ascending vertex tuple.
    ///
    /// Panics if the tuple is not strictly ascending; use
    /// [`Clique::canonicalize`] for arbitrary orderings.
    pub fn new(verts: Vec<VertexId>) -> Self {
        assert!(
            verts.windows(2).all(|w| w[0] < w[1]),
            "clique vertices must be strictly ascending: {verts:?}"
        );
        Clique { verts }
    }

    /// Sorts an arbitrary tuple into canonical order, returning the clique
    /// and the sign of the sorting permutation. `None` if a vertex repeats.
    pub fn canonicalize(tuple: &[VertexId]) -> Option<(Clique, f64)> {
        let mut verts = tuple.to_vec();
        let mut sign = 1.0;
        // Insertion sort, counting transpositions.
        for i in 1..verts.len() {
            let mut j = i;
            while j > 0 && verts[j - 1] > verts[j] {
                verts.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Clique { verts }, sign))
    }

    pub fn verts(&self) -> &[VertexId] {
        &self.verts
    }

    /// Number of vertices (`k` for a `k`-clique).
    pub fn order(&self) -> usize {
        self.verts.len()
    }
}

/// Lists all `k`-cliques of `g`, each exactly once, in canonical order.
///
/// Works by incremental extension: a sorted `j`-clique is extended by every
/// common neighbor greater than its largest vertex, so each clique is
/// produced from its unique ascending prefix.
pub fn enumerate_cliques(g: &Graph, k: usize) -> Vec<Clique> {
    assert!(k >= 1, "clique order must be at least 1");
    let mut current: Vec<Vec<VertexId>> = g.vertices().iter().map(|&v| vec![v]).collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for c in &current {
            let last = *c.last().unwrap();
            'candidate: for &u in g.neighbors(last) {
                if u <= last {
                    continue;
                }
                for &v in &c[..c.len() - 1] {
                    if !g.has_edge(u, v) {
                        continue 'candidate;
                    }
                }
                let mut extended = c.clone();
                extended.push(u);
                next.push(extended);
            }
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    if current.first().map(|c| c.len()) != Some(k) {
        return Vec::new();
    }
    current.sort_unstable();
    current.into_iter().map(Clique::new).collect()
}

/// Largest `k` with a `k`-clique (0 for the empty graph).
pub fn clique_number(g: &Graph) -> usize {
    let mut k = 0;
    loop {
        if enumerate_cliques(g, k + 1).is_empty() {
            return k;
        }
        k += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Unit,
    Normalized,
    Explicit,
}

/// How clique weights are produced: the unit weight, the normalized weight
/// induced by positive edge weights, or an explicit table.
#[derive(Clone, Debug)]
pub struct WeightSpec {
    mode: WeightMode,
    edge_weights: BTreeMap<(VertexId, VertexId), f64>,
    clique_weights: BTreeMap<Clique, f64>,
}

impl WeightSpec {
    pub fn unit() -> Self {
        WeightSpec {
            mode: WeightMode::Unit,
            edge_weights: BTreeMap::new(),
            clique_weights: BTreeMap::new(),
        }
    }

    /// Normalized weight induced by the given positive edge weights:
    /// vertex weight is the weighted degree, and a `k`-clique (k >= 2)
    /// weighs the sum of its pairwise edge weights.
    pub fn normalized(
        edge_weights: impl IntoIterator<Item = ((VertexId, VertexId), f64)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for ((a, b), w) in edge_weights {
            let key = if a < b { (a, b) } else { (b, a) };
            if w <= 0.0 {
                return Err(Error::NonPositiveWeight {
                    clique: vec![key.0, key.1],
                    value: w,
                });
            }
            map.insert(key, w);
        }
        Ok(WeightSpec {
            mode: WeightMode::Normalized,
            edge_weights: map,
            clique_weights: BTreeMap::new(),
        })
    }

    /// Normalized weight with every edge weighing 1.
    pub fn normalized_unit_edges(g: &Graph) -> Self {
        WeightSpec {
            mode: WeightMode::Normalized,
            edge_weights: g.edges().iter().map(|&e| (e, 1.0)).collect(),
            clique_weights: BTreeMap::new(),
        }
    }

    pub fn explicit(
        clique_weights: impl IntoIterator<Item = (Clique, f64)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (c, w) in clique_weights {
            if w <= 0.0 {
                return Err(Error::NonPositiveWeight {
                    clique: c.verts().to_vec(),
                    value: w,
                });
            }
            map.insert(c, w);
        }
        Ok(WeightSpec {
            mode: WeightMode::Explicit,
            clique_weights: map,
            edge_weights: BTreeMap::new(),
        })
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    fn edge_weight(&self, u: VertexId, v: VertexId) -> Result<f64, Error> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_weights
            .get(&key)
            .copied()
            .ok_or(Error::MissingEdgeWeight { u: key.0, v: key.1 })
    }

    fn weight_of(&self, g: &Graph, c: &Clique) -> Result<f64, Error> {
        match self.mode {
            WeightMode::Unit => Ok(1.0),
            WeightMode::Normalized => {
                let verts = c.verts();
                if verts.len() == 1 {
                    let v = verts[0];
                    let mut acc = 0.0;
                    for &u in g.neighbors(v) {
                        acc += self.edge_weight(v, u)?;
                    }
                    Ok(acc)
                } else {
                    let mut acc = 0.0;
                    for i in 0..verts.len() {
                        for j in (i + 1)..verts.len() {
                            acc += self.edge_weight(verts[i], verts[j])?;
                        }
                    }
                    Ok(acc)
                }
            }
            WeightMode::Explicit => {
                self.clique_weights
                    .get(c)
                    .copied()
                    .ok_or_else(|| Error::MissingWeight {
                        clique: c.verts().to_vec(),
                    })
            }
        }
    }
}

/// The induced weight table for all `k`-cliques of `g` under `spec`.
pub fn induced_weight(
    g: &Graph,
    spec: &WeightSpec,
    k: usize,
) -> Result<BTreeMap<Clique, f64>, Error> {
    let mut out = BTreeMap::new();
    for c in enumerate_cliques(g, k) {
        let w = spec.weight_of(g, &c)?;
        if w <= 0.0 {
            return Err(Error::NonPositiveWeight {
                clique: c.verts().to_vec(),
                value: w,
            });
        }
        out.insert(c, w);
    }
    Ok(out)
}

/// A graph together with its full clique tables and positive clique
/// weights; the owner object for forms and operators.
///
/// Clique lists are sorted, and every operator downstream indexes into
/// them, so assembly is deterministic.
#[derive(Debug)]
pub struct WeightedGraph {
    graph: Graph,
    spec: WeightSpec,
    max_order: usize,
    cliques: Vec<Vec<Clique>>,
    weights: Vec<Vec<f64>>,
    index: Vec<HashMap<Clique, usize>>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, spec: WeightSpec) -> Result<Arc<Self>, Error> {
        let max_order = clique_number(&graph);
        let mut cliques = vec![Vec::new()];
        let mut weights = vec![Vec::new()];
        let mut index = vec![HashMap::new()];
        for k in 1..=max_order {
            let table = induced_weight(&graph, &spec, k)?;
            let mut level_cliques = Vec::with_capacity(table.len());
            let mut level_weights = Vec::with_capacity(table.len());
            let mut level_index = HashMap::with_capacity(table.len());
            for (i, (c, w)) in table.into_iter().enumerate() {
                level_index.insert(c.clone(), i);
                level_cliques.push(c);
                level_weights.push(w);
            }
            cliques.push(level_cliques);
            weights.push(level_weights);
            index.push(level_index);
        }
        Ok(Arc::new(WeightedGraph {
            graph,
            spec,
            max_order,
            cliques,
            weights,
            index,
        }))
    }

    pub fn unit(graph: Graph) -> Result<Arc<Self>, Error> {
        WeightedGraph::new(graph, WeightSpec::unit())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weight_spec(&self) -> &WeightSpec {
        &self.spec
    }

    /// Largest clique order present in the graph.
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Canonical list of `k`-cliques (empty beyond the clique number).
    pub fn cliques(&self, order: usize) -> &[Clique] {
        self.cliques.get(order).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn clique_count(&self, order: usize) -> usize {
        self.cliques(order).len()
    }

    /// Weights aligned with [`WeightedGraph::cliques`].
    pub fn weights(&self, order: usize) -> &[f64] {
        self.weights.get(order).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn clique_index(&self, c: &Clique) -> Option<usize> {
        self.index.get(c.order())?.get(c).copied()
    }

    pub fn weight_of(&self, c: &Clique) -> Option<f64> {
        let idx = self.clique_index(c)?;
        Some(self.weights[c.order()][idx])
    }

    /// Dimension of the space of `k`-forms: the number of `(k+1)`-cliques.
    pub fn form_dim(&self, degree: usize) -> usize {
        self.clique_count(degree + 1)
    }
}

/// A boundary clique stored boundary-vertex-first, interior tail ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryClique {
    verts: Vec<VertexId>,
}

impl BoundaryClique {
    fn new(boundary: VertexId, mut interior: Vec<VertexId>) -> Self {
        interior.sort_unstable();
        let mut verts = vec![boundary];
        verts.extend(interior);
        BoundaryClique { verts }
    }

    pub fn verts(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn boundary_vertex(&self) -> VertexId {
        self.verts[0]
    }

    pub fn interior_tail(&self) -> &[VertexId] {
        &self.verts[1..]
    }

    pub fn order(&self) -> usize {
        self.verts.len()
    }

    /// The canonical ascending clique plus the sign relating the stored
    /// (boundary-first) orientation to it.
    pub fn canonical(&self) -> (Clique, f64) {
        Clique::canonicalize(&self.verts).expect("boundary clique has distinct vertices")
    }
}

/// The boundary data of a graph with boundary: interior, vertex boundary,
/// and the boundary cliques of every order.
#[derive(Clone, Debug)]
pub struct BoundaryStructure {
    interior: BTreeSet<VertexId>,
    boundary: BTreeSet<VertexId>,
    boundary_cliques_by_order: Vec<Vec<BoundaryClique>>,
}

impl BoundaryStructure {
    pub fn interior(&self) -> &BTreeSet<VertexId> {
        &self.interior
    }

    pub fn boundary(&self) -> &BTreeSet<VertexId> {
        &self.boundary
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.interior.contains(&v)
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.boundary.contains(&v)
    }

    /// `C_k(∂Ω)`: boundary cliques of order `k`, deterministic order.
    pub fn boundary_cliques(&self, order: usize) -> &[BoundaryClique] {
        self.boundary_cliques_by_order
            .get(order)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn max_boundary_order(&self) -> usize {
        self.boundary_cliques_by_order.len().saturating_sub(1)
    }

    /// Reorders the boundary cliques of one order; the basis order is a
    /// convention, so any permutation describes the same structure.
    pub fn with_permuted_cliques(&self, order: usize, perm: &[usize]) -> Self {
        let mut out = self.clone();
        let old = &self.boundary_cliques_by_order[order];
        assert_eq!(perm.len(), old.len());
        out.boundary_cliques_by_order[order] = perm.iter().map(|&i| old[i].clone()).collect();
        out
    }
}

/// Builds the boundary structure of `(g, Ω)`: the boundary is every vertex
/// outside `interior` adjacent to it, and the boundary cliques are
/// partitioned by order. Validates the graph-with-boundary axioms
/// (`E(B,B) = ∅`, no stranded vertices).
pub fn boundary_structure(
    g: &Graph,
    interior: &BTreeSet<VertexId>,
) -> Result<BoundaryStructure, Error> {
    if interior.is_empty() {
        return Err(Error::EmptyInterior);
    }
    for &v in interior {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex { vertex: v });
        }
    }
    let mut boundary = BTreeSet::new();
    for &v in g.vertices() {
        if interior.contains(&v) {
            continue;
        }
        if g.neighbors(v).iter().any(|u| interior.contains(u)) {
            boundary.insert(v);
        } else {
            return Err(Error::StrandedVertex { vertex: v });
        }
    }
    for &(u, v) in g.edges() {
        if boundary.contains(&u) && boundary.contains(&v) {
            return Err(Error::BoundaryEdge { u, v });
        }
    }

    let max_order = clique_number(g);
    let mut by_order: Vec<Vec<BoundaryClique>> = vec![Vec::new(); max_order + 1];
    for k in 1..=max_order {
        for c in enumerate_cliques(g, k) {
            let b: Vec<VertexId> = c
                .verts()
                .iter()
                .copied()
                .filter(|v| boundary.contains(v))
                .collect();
            if b.len() == 1 {
                let tail: Vec<VertexId> = c
                    .verts()
                    .iter()
                    .copied()
                    .filter(|v| *v != b[0])
                    .collect();
                by_order[k].push(BoundaryClique::new(b[0], tail));
            }
        }
        by_order[k].sort();
    }
    Ok(BoundaryStructure {
        interior: interior.clone(),
        boundary,
        boundary_cliques_by_order: by_order,
    })
}

/// Builds `Ω̃` from an ambient graph: the subgraph on `Ω̄ = Ω ∪ δΩ` keeping
/// exactly the edges with at least one end in `Ω` (boundary-boundary edges
/// are dropped), together with its boundary structure.
pub fn subgraph_tilde(
    ambient: &Graph,
    interior: &BTreeSet<VertexId>,
) -> Result<(Graph, BoundaryStructure), Error> {
    if interior.is_empty() {
        return Err(Error::EmptyInterior);
    }
    for &v in interior {
        if !ambient.contains_vertex(v) {
            return Err(Error::UnknownVertex { vertex: v });
        }
    }
    let mut vertices: BTreeSet<VertexId> = interior.clone();
    let mut edges = Vec::new();
    for &(u, v) in ambient.edges() {
        if interior.contains(&u) || interior.contains(&v) {
            vertices.insert(u);
            vertices.insert(v);
            edges.push((u, v));
        }
    }
    let tilde = Graph::new(vertices.into_iter().collect(), edges)?;
    let bs = boundary_structure(&tilde, interior)?;
    Ok((tilde, bs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(vec![0, 1, 2], vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn four_cycle() -> Graph {
        Graph::new(vec![0, 1, 2, 3], vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    /// Independent oracle: all k-subsets of the vertex set, kept when
    /// pairwise adjacent.
    fn cliques_by_subsets(g: &Graph, k: usize) -> Vec<Vec<VertexId>> {
        let verts = g.vertices();
        let mut out = Vec::new();
        let mut pick = vec![0usize; k];
        fn rec(
            g: &Graph,
            verts: &[VertexId],
            k: usize,
            start: usize,
            pick: &mut Vec<usize>,
            depth: usize,
            out: &mut Vec<Vec<VertexId>>,
        ) {
            if depth == k {
                let cand: Vec<VertexId> = pick.iter().map(|&i| verts[i]).collect();
                if g.is_clique(&cand) {
                    out.push(cand);
                }
                return;
            }
            for i in start..verts.len() {
                pick[depth] = i;
                rec(g, verts, k, i + 1, pick, depth + 1, out);
            }
        }
        rec(g, verts, k, 0, &mut pick, 0, &mut out);
        out
    }

    #[test]
    fn triangle_has_one_3_clique() {
        let g = triangle();
        let c3 = enumerate_cliques(&g, 3);
        assert_eq!(c3.len(), 1);
        assert_eq!(c3[0].verts(), &[0, 1, 2]);
    }

    #[test]
    fn four_cycle_has_no_triangles() {
        assert!(enumerate_cliques(&four_cycle(), 3).is_empty());
    }

    #[test]
    fn clique_counts_match_vertices_and_edges() {
        for g in [triangle(), four_cycle()] {
            assert_eq!(enumerate_cliques(&g, 1).len(), g.vertex_count());
            assert_eq!(enumerate_cliques(&g, 2).len(), g.edge_count());
        }
    }

    #[test]
    fn tessellation_unit_square_cliques() {
        // Induced standard tessellation of Z^2 on the unit square corners
        // o, e1, e2, e1+e2 (ids 0..3 in that order). e1 and e2 differ by
        // (-1, 1), which is not a 0/1 vector up to sign, so they are not
        // adjacent: five edges, and by exhaustive subset check two
        // triangles and no 4-clique.
        let g = Graph::new(
            vec![0, 1, 2, 3],
            vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
        )
        .unwrap();
        let expect3 = cliques_by_subsets(&g, 3);
        assert_eq!(expect3.len(), 2);
        let got3 = enumerate_cliques(&g, 3);
        assert_eq!(
            got3.iter().map(|c| c.verts().to_vec()).collect::<Vec<_>>(),
            expect3
        );
        assert!(enumerate_cliques(&g, 4).is_empty());
        assert!(cliques_by_subsets(&g, 4).is_empty());
    }

    #[test]
    fn enumeration_matches_subset_oracle_on_larger_graph() {
        // Fixed pseudo-random graph on 8 vertices.
        let mut edges = Vec::new();
        let mut state = 0x12345678u64;
        for u in 0..8u32 {
            for v in (u + 1)..8 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (state >> 33) % 100 < 55 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new((0..8).collect(), edges).unwrap();
        for k in 1..=5 {
            let expect = cliques_by_subsets(&g, k);
            let got: Vec<Vec<VertexId>> = enumerate_cliques(&g, k)
                .iter()
                .map(|c| c.verts().to_vec())
                .collect();
            assert_eq!(got, expect, "order {k}");
            for c in enumerate_cliques(&g, k) {
                assert!(g.is_clique(c.verts()));
            }
        }
    }

    #[test]
    fn rejects_loops_duplicates_unknown_endpoints() {
        let err = Graph::new(vec![0, 1], vec![(0, 0)]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop { vertex: 0 }));
        let err = Graph::new(vec![0, 1], vec![(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { u: 0, v: 1 }));
        let err = Graph::new(vec![0, 1], vec![(0, 2)]).unwrap_err();
        assert!(matches!(err, Error::UnknownEndpoint { u: 0, v: 2 }));
    }

    #[test]
    fn normalized_weights_on_star() {
        // K_{1,4}: center 0, leaves 1..4, unit edge weights.
        let g = Graph::new(
            vec![0, 1, 2, 3, 4],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        )
        .unwrap();
        let spec = WeightSpec::normalized_unit_edges(&g);
        let w1 = induced_weight(&g, &spec, 1).unwrap();
        assert_eq!(w1[&Clique::new(vec![0])], 4.0);
        for leaf in 1..=4 {
            assert_eq!(w1[&Clique::new(vec![leaf])], 1.0);
        }
        let w2 = induced_weight(&g, &spec, 2).unwrap();
        assert!(w2.values().all(|&w| w == 1.0));
    }

    #[test]
    fn normalized_triangle_weight_is_edge_sum() {
        let g = triangle();
        let spec = WeightSpec::normalized_unit_edges(&g);
        let w3 = induced_weight(&g, &spec, 3).unwrap();
        assert_eq!(w3[&Clique::new(vec![0, 1, 2])], 3.0);
    }

    #[test]
    fn unit_mode_weighs_every_clique_one() {
        let g = triangle();
        let spec = WeightSpec::unit();
        for k in 1..=3 {
            let w = induced_weight(&g, &spec, k).unwrap();
            assert!(w.values().all(|&x| x == 1.0));
        }
    }

    #[test]
    fn normalized_vertex_weight_is_weighted_degree() {
        let g = four_cycle();
        let spec = WeightSpec::normalized(vec![
            ((0, 1), 2.0),
            ((1, 2), 3.0),
            ((2, 3), 5.0),
            ((0, 3), 7.0),
        ])
        .unwrap();
        let w1 = induced_weight(&g, &spec, 1).unwrap();
        assert_eq!(w1[&Clique::new(vec![0])], 9.0);
        assert_eq!(w1[&Clique::new(vec![1])], 5.0);
        assert_eq!(w1[&Clique::new(vec![2])], 8.0);
        assert_eq!(w1[&Clique::new(vec![3])], 12.0);
        let w2 = induced_weight(&g, &spec, 2).unwrap();
        assert_eq!(w2[&Clique::new(vec![1, 2])], 3.0);
    }

    #[test]
    fn explicit_weights_error_names_missing_clique() {
        let g = triangle();
        let spec = WeightSpec::explicit(vec![(Clique::new(vec![0]), 1.0)]).unwrap();
        let err = induced_weight(&g, &spec, 1).unwrap_err();
        match err {
            Error::MissingWeight { clique } => assert_eq!(clique, vec![1]),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn boundary_of_path_interior_midpoint() {
        let g = Graph::new(vec![0, 1, 2], vec![(0, 1), (1, 2)]).unwrap();
        let bs = boundary_structure(&g, &BTreeSet::from([1])).unwrap();
        assert_eq!(bs.boundary().iter().copied().collect::<Vec<_>>(), vec![0, 2]);
        let c2 = bs.boundary_cliques(2);
        assert_eq!(c2.len(), 2);
        assert_eq!(c2[0].verts(), &[0, 1]);
        assert_eq!(c2[1].verts(), &[2, 1]);
    }

    #[test]
    fn boundary_structure_rejects_boundary_edge() {
        let g = Graph::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let err = boundary_structure(&g, &BTreeSet::from([0])).unwrap_err();
        assert!(matches!(err, Error::BoundaryEdge { u: 1, v: 2 }));
    }

    #[test]
    fn boundary_structure_rejects_empty_interior() {
        let g = triangle();
        let err = boundary_structure(&g, &BTreeSet::new()).unwrap_err();
        assert!(matches!(err, Error::EmptyInterior));
    }

    #[test]
    fn tilde_drops_boundary_boundary_edges() {
        // Ambient: triangle 0-1-2 plus pendant 3 on 0. Interior {0}:
        // the edge (1,2) joins two boundary vertices and must be dropped.
        let g = Graph::new(vec![0, 1, 2, 3], vec![(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let (tilde, bs) = subgraph_tilde(&g, &BTreeSet::from([0])).unwrap();
        assert_eq!(tilde.edge_count(), 3);
        assert!(!tilde.has_edge(1, 2));
        assert_eq!(bs.boundary().len(), 3);
        // Every boundary clique has exactly one boundary vertex.
        for order in 1..=tilde.vertex_count() {
            for bc in bs.boundary_cliques(order) {
                let count = bc
                    .verts()
                    .iter()
                    .filter(|v| bs.is_boundary(**v))
                    .count();
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn canonicalize_tracks_sign() {
        let (c, s) = Clique::canonicalize(&[2, 0, 1]).unwrap();
        assert_eq!(c.verts(), &[0, 1, 2]);
        assert_eq!(s, 1.0); // cyclic permutation, even
        let (_, s) = Clique::canonicalize(&[1, 0]).unwrap();
        assert_eq!(s, -1.0);
        assert!(Clique::canonicalize(&[1, 1]).is_none());
    }
}
