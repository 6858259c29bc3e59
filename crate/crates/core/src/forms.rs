//! k-forms on weighted graphs: skew-symmetrization, tensor and wedge
//! products, the exterior differential and codifferential, Hodge
//! Laplacians, inner products, and the Hodge decomposition.
//!
//! A k-form assigns one value to each canonical (k+1)-clique; evaluation at
//! an arbitrary ordering multiplies by the sign of the permutation back to
//! canonical order and vanishes off cliques.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Error;
use crate::graph::{BoundaryStructure, Clique, VertexId, WeightedGraph};
use crate::linalg::{pseudo_solve, rank_sym, Matrix};

/// Relative eigenvalue cutoff for numerical rank and kernel decisions.
pub const RANK_REL_TOL: f64 = 1e-9;

/// Visits every permutation of `0..n` with its sign (Heap's algorithm;
/// each step is one transposition, so the sign just alternates).
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], f64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1.0;
    f(&perm, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// A k-form: one value per canonical (k+1)-clique of its owner.
#[derive(Clone, Debug)]
pub struct KForm {
    owner: Arc<WeightedGraph>,
    degree: usize,
    values: Vec<f64>,
}

impl KForm {
    pub fn zero(owner: Arc<WeightedGraph>, degree: usize) -> Self {
        let dim = owner.form_dim(degree);
        KForm {
            owner,
            degree,
            values: vec![0.0; dim],
        }
    }

    pub fn from_values(
        owner: Arc<WeightedGraph>,
        degree: usize,
        values: Vec<f64>,
    ) -> Result<Self, Error> {
        let dim = owner.form_dim(degree);
        if values.len() != dim {
            return Err(Error::DegreeMismatch {
                expected: dim,
                got: values.len(),
            });
        }
        Ok(KForm {
            owner,
            degree,
            values,
        })
    }

    pub fn from_fn(
        owner: Arc<WeightedGraph>,
        degree: usize,
        mut f: impl FnMut(&Clique) -> f64,
    ) -> Self {
        let values = owner.cliques(degree + 1).iter().map(|c| f(c)).collect();
        KForm {
            owner,
            degree,
            values,
        }
    }

    /// The indicator of one canonical clique.
    pub fn basis(owner: Arc<WeightedGraph>, degree: usize, index: usize) -> Self {
        let mut form = KForm::zero(owner, degree);
        form.values[index] = 1.0;
        form
    }

    pub fn owner(&self) -> &Arc<WeightedGraph> {
        &self.owner
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Value on a canonical clique (0 if it is not a clique of the owner).
    pub fn value_at(&self, c: &Clique) -> f64 {
        match self.owner.clique_index(c) {
            Some(i) if c.order() == self.degree + 1 => self.values[i],
            _ => 0.0,
        }
    }

    /// Skew evaluation at an arbitrary ordered tuple.
    pub fn evaluate(&self, tuple: &[VertexId]) -> f64 {
        if tuple.len() != self.degree + 1 {
            return 0.0;
        }
        match Clique::canonicalize(tuple) {
            Some((c, sign)) => sign * self.value_at(&c),
            None => 0.0,
        }
    }

    pub fn same_owner(&self, other: &KForm) -> bool {
        Arc::ptr_eq(&self.owner, &other.owner)
    }

    pub fn add(&self, other: &KForm) -> Result<KForm, Error> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &KForm) -> Result<KForm, Error> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &KForm, f: impl Fn(f64, f64) -> f64) -> Result<KForm, Error> {
        if !self.same_owner(other) {
            return Err(Error::OwnerMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(*a, *b))
            .collect();
        Ok(KForm {
            owner: self.owner.clone(),
            degree: self.degree,
            values,
        })
    }

    pub fn scale(&self, s: f64) -> KForm {
        KForm {
            owner: self.owner.clone(),
            degree: self.degree,
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// A k-tensor: values on ordered (k+1)-tuples that form cliques, with no
/// symmetry imposed.
#[derive(Clone, Debug)]
pub struct KTensor {
    owner: Arc<WeightedGraph>,
    degree: usize,
    values: HashMap<Vec<VertexId>, f64>,
}

impl KTensor {
    pub fn zero(owner: Arc<WeightedGraph>, degree: usize) -> Self {
        KTensor {
            owner,
            degree,
            values: HashMap::new(),
        }
    }

    pub fn owner(&self) -> &Arc<WeightedGraph> {
        &self.owner
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sets the value on one ordered tuple; the tuple must span a clique.
    pub fn set(&mut self, tuple: &[VertexId], value: f64) -> Result<(), Error> {
        if tuple.len() != self.degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: self.degree + 1,
                got: tuple.len(),
            });
        }
        if Clique::canonicalize(tuple)
            .and_then(|(c, _)| self.owner.clique_index(&c))
            .is_none()
        {
            return Err(Error::InvalidInput(format!(
                "tuple {tuple:?} does not span a clique"
            )));
        }
        self.values.insert(tuple.to_vec(), value);
        Ok(())
    }

    pub fn value(&self, tuple: &[VertexId]) -> f64 {
        self.values.get(tuple).copied().unwrap_or(0.0)
    }

    /// A form viewed as a tensor (its skew evaluations become stored values).
    pub fn from_form(form: &KForm) -> KTensor {
        let mut t = KTensor::zero(form.owner().clone(), form.degree());
        let k1 = form.degree() + 1;
        for c in form.owner().cliques(k1) {
            for_each_permutation(k1, |perm, sign| {
                let tuple: Vec<VertexId> = perm.iter().map(|&i| c.verts()[i]).collect();
                let v = sign * form.value_at(c);
                if v != 0.0 {
                    t.values.insert(tuple, v);
                }
            });
        }
        t
    }

    pub fn same_owner(&self, other: &KTensor) -> bool {
        Arc::ptr_eq(&self.owner, &other.owner)
    }
}

/// Skew-symmetrization `A`: averages signed values over all orderings of
/// each clique; the identity on forms.
pub fn skew_symmetrize(t: &KTensor) -> KForm {
    let owner = t.owner().clone();
    let k1 = t.degree() + 1;
    let inv = 1.0 / factorial(k1);
    KForm::from_fn(owner.clone(), t.degree(), |c| {
        let mut acc = 0.0;
        for_each_permutation(k1, |perm, sign| {
            let tuple: Vec<VertexId> = perm.iter().map(|&i| c.verts()[i]).collect();
            acc += sign * t.value(&tuple);
        });
        acc * inv
    })
}

/// Tensor product: `(f ⊗ g)(v_0..v_{r+s}) = 1_G(..) f(v_0..v_r) g(v_r..v_{r+s})`.
pub fn tensor_product(f: &KTensor, g: &KTensor) -> Result<KForm2Tensor, Error> {
    if !f.same_owner(g) {
        return Err(Error::OwnerMismatch);
    }
    let owner = f.owner().clone();
    let (r, s) = (f.degree(), g.degree());
    let total = r + s;
    let mut out = KTensor::zero(owner.clone(), total);
    for c in owner.cliques(total + 1) {
        for_each_permutation(total + 1, |perm, _| {
            let tuple: Vec<VertexId> = perm.iter().map(|&i| c.verts()[i]).collect();
            let v = f.value(&tuple[0..=r]) * g.value(&tuple[r..=total]);
            if v != 0.0 {
                out.values.insert(tuple, v);
            }
        });
    }
    Ok(out)
}

// The product of two tensors is a tensor; alias to keep signatures readable.
pub type KForm2Tensor = KTensor;

/// Wedge product of forms: skew-symmetrized tensor product.
pub fn wedge(alpha: &KForm, beta: &KForm) -> Result<KForm, Error> {
    if !alpha.same_owner(beta) {
        return Err(Error::OwnerMismatch);
    }
    let product = tensor_product(&KTensor::from_form(alpha), &KTensor::from_form(beta))?;
    Ok(skew_symmetrize(&product))
}

/// Signed incidence of `d` from degree `k` to `k+1`: entries
/// `(row, col, sign)` with `row` indexing (k+2)-cliques, `col` the face
/// (k+1)-cliques, and `sign = (-1)^j` for the face dropping vertex `j`.
/// Faces of an ascending clique are ascending, so the signs are exact.
pub fn d_incidence(owner: &WeightedGraph, degree: usize) -> Vec<(usize, usize, i8)> {
    let mut entries = Vec::new();
    for (row, c) in owner.cliques(degree + 2).iter().enumerate() {
        let verts = c.verts();
        for j in 0..verts.len() {
            let face: Vec<VertexId> = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, v)| *v)
                .collect();
            let col = owner
                .clique_index(&Clique::new(face))
                .expect("face of a clique is a clique");
            let sign = if j % 2 == 0 { 1i8 } else { -1i8 };
            entries.push((row, col, sign));
        }
    }
    entries
}

/// The matrix of `d: A^k -> A^{k+1}` in the canonical clique bases.
pub fn d_matrix(owner: &WeightedGraph, degree: usize) -> Matrix {
    let rows = owner.form_dim(degree + 1);
    let cols = owner.form_dim(degree);
    let mut m = Matrix::zeros(rows, cols);
    for (r, c, s) in d_incidence(owner, degree) {
        m.add_to(r, c, s as f64);
    }
    m
}

/// Exterior differential of a form.
pub fn exterior_d(alpha: &KForm) -> KForm {
    let owner = alpha.owner().clone();
    let k = alpha.degree();
    let mut out = KForm::zero(owner.clone(), k + 1);
    for (row, col, sign) in d_incidence(&owner, k) {
        out.values_mut()[row] += sign as f64 * alpha.values()[col];
    }
    out
}

/// Codifferential, evaluated from its explicit formula: for a canonical
/// (k+1)-clique `c`,
/// `δα(c) = ( Σ_v α(v, c) w(v ∪ c) ) / w(c)`,
/// with `v` running over vertices extending `c` to a (k+2)-clique.
pub fn codifferential(alpha: &KForm) -> KForm {
    let owner = alpha.owner().clone();
    if alpha.degree() == 0 {
        // δ on 0-forms lands in the empty (-1)-form space; represent the
        // result as the zero 0-form so callers can stay uniform.
        return KForm::zero(owner, 0);
    }
    let k = alpha.degree() - 1;
    let g = owner.graph();
    KForm::from_fn(owner.clone(), k, |c| {
        let verts = c.verts();
        let mut acc = 0.0;
        for &v in g.neighbors(verts[0]) {
            if verts.contains(&v) || !verts.iter().all(|&u| u == verts[0] || g.has_edge(v, u)) {
                continue;
            }
            let mut tuple = Vec::with_capacity(verts.len() + 1);
            tuple.push(v);
            tuple.extend_from_slice(verts);
            let (bigger, sign) = Clique::canonicalize(&tuple).expect("distinct vertices");
            if let Some(w) = owner.weight_of(&bigger) {
                acc += sign * alpha.value_at(&bigger) * w;
            }
        }
        acc / owner.weight_of(c).expect("clique of owner")
    })
}

/// A linear map between form spaces, stored densely in the canonical
/// clique bases.
#[derive(Clone, Debug)]
pub struct LinearFormOperator {
    owner: Arc<WeightedGraph>,
    domain_degree: usize,
    codomain_degree: usize,
    matrix: Matrix,
}

impl LinearFormOperator {
    pub fn new(
        owner: Arc<WeightedGraph>,
        domain_degree: usize,
        codomain_degree: usize,
        matrix: Matrix,
    ) -> Self {
        assert_eq!(matrix.cols(), owner.form_dim(domain_degree));
        assert_eq!(matrix.rows(), owner.form_dim(codomain_degree));
        LinearFormOperator {
            owner,
            domain_degree,
            codomain_degree,
            matrix,
        }
    }

    pub fn owner(&self) -> &Arc<WeightedGraph> {
        &self.owner
    }

    pub fn domain_degree(&self) -> usize {
        self.domain_degree
    }

    pub fn codomain_degree(&self) -> usize {
        self.codomain_degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, form: &KForm) -> Result<KForm, Error> {
        if !Arc::ptr_eq(&self.owner, form.owner()) {
            return Err(Error::OwnerMismatch);
        }
        if form.degree() != self.domain_degree {
            return Err(Error::DegreeMismatch {
                expected: self.domain_degree,
                got: form.degree(),
            });
        }
        let values = self.matrix.matvec(form.values());
        KForm::from_values(self.owner.clone(), self.codomain_degree, values)
    }

    /// Coordinate-list export: `(codomain clique, domain clique, coefficient)`
    /// for every nonzero entry.
    pub fn to_coo(&self) -> Vec<(Clique, Clique, f64)> {
        let rows = self.owner.cliques(self.codomain_degree + 1);
        let cols = self.owner.cliques(self.domain_degree + 1);
        let mut out = Vec::new();
        for (i, rc) in rows.iter().enumerate() {
            for (j, cc) in cols.iter().enumerate() {
                let v = self.matrix.get(i, j);
                if v != 0.0 {
                    out.push((rc.clone(), cc.clone(), v));
                }
            }
        }
        out
    }
}

/// The matrix of `δ: A^{k+1} -> A^k`, i.e. `W_k^{-1} D_k^T W_{k+1}`.
pub fn delta_matrix(owner: &WeightedGraph, degree_from: usize) -> Matrix {
    assert!(degree_from >= 1, "codifferential needs degree >= 1");
    let k = degree_from - 1;
    let d = d_matrix(owner, k);
    let w_hi = owner.weights(degree_from + 1);
    let w_lo = owner.weights(k + 1);
    let rows = owner.form_dim(k);
    let cols = owner.form_dim(degree_from);
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, d.get(j, i) * w_hi[j] / w_lo[i]);
        }
    }
    m
}

/// Hodge Laplacian `Δ = dδ + δd` on degree-k forms.
///
/// Assembled as `W_k^{-1} (D_k^T W_{k+1} D_k) + D_{k-1} W_{k-1}^{-1} D_{k-1}^T W_k`,
/// which is self-adjoint under the weighted inner product by construction.
pub fn hodge_laplacian(owner: &Arc<WeightedGraph>, degree: usize) -> LinearFormOperator {
    let n = owner.form_dim(degree);
    let w_k = owner.weights(degree + 1);
    let mut total = Matrix::zeros(n, n);

    // δd term: W_k^{-1} D_k^T W_{k+1} D_k.
    if owner.form_dim(degree + 1) > 0 {
        let d_up = d_matrix(owner, degree);
        let gram = d_up.gram_weighted(owner.weights(degree + 2));
        for i in 0..n {
            for j in 0..n {
                total.add_to(i, j, gram.get(i, j) / w_k[i]);
            }
        }
    }

    // dδ term: D_{k-1} W_{k-1}^{-1} D_{k-1}^T W_k.
    if degree >= 1 && owner.form_dim(degree - 1) > 0 {
        let d_down = d_matrix(owner, degree - 1);
        let w_lo = owner.weights(degree);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for l in 0..owner.form_dim(degree - 1) {
                    acc += d_down.get(i, l) / w_lo[l] * d_down.get(j, l);
                }
                total.add_to(i, j, acc * w_k[j]);
            }
        }
    }

    LinearFormOperator::new(owner.clone(), degree, degree, total)
}

/// Where an inner product sums: everything, the interior cliques, the
/// boundary cliques, or an explicit clique subset.
#[derive(Clone, Copy)]
pub enum Region<'a> {
    Global,
    Interior(&'a BoundaryStructure),
    Boundary(&'a BoundaryStructure),
    Subset(&'a [Clique]),
}

/// Weighted inner product of two equal-degree forms over a region.
///
/// Computed as a sum over unordered canonical cliques; the factorial
/// prefactors in the ordered-tuple definitions cancel exactly against the
/// number of orderings.
pub fn inner_product(alpha: &KForm, beta: &KForm, region: Region) -> Result<f64, Error> {
    if !alpha.same_owner(beta) {
        return Err(Error::OwnerMismatch);
    }
    if alpha.degree() != beta.degree() {
        return Err(Error::DegreeMismatch {
            expected: alpha.degree(),
            got: beta.degree(),
        });
    }
    let owner = alpha.owner();
    let order = alpha.degree() + 1;
    let cliques = owner.cliques(order);
    let weights = owner.weights(order);
    let mut acc = 0.0;
    match region {
        Region::Global => {
            for i in 0..cliques.len() {
                acc += alpha.values()[i] * beta.values()[i] * weights[i];
            }
        }
        Region::Interior(bs) => {
            for (i, c) in cliques.iter().enumerate() {
                if c.verts().iter().all(|&v| bs.is_interior(v)) {
                    acc += alpha.values()[i] * beta.values()[i] * weights[i];
                }
            }
        }
        Region::Boundary(bs) => {
            for (i, c) in cliques.iter().enumerate() {
                let b = c.verts().iter().filter(|&&v| bs.is_boundary(v)).count();
                if b == 1 {
                    acc += alpha.values()[i] * beta.values()[i] * weights[i];
                }
            }
        }
        Region::Subset(set) => {
            for c in set {
                if let Some(i) = owner.clique_index(c) {
                    if c.order() == order {
                        acc += alpha.values()[i] * beta.values()[i] * weights[i];
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// Orthogonal Hodge decomposition `α = dβ + h + δγ`.
pub fn hodge_decomposition(alpha: &KForm) -> (KForm, KForm, KForm) {
    let owner = alpha.owner().clone();
    let k = alpha.degree();
    let n = owner.form_dim(k);
    let w_k = owner.weights(k + 1);

    // Exact part: weighted least-squares projection onto im(d_{k-1}).
    let exact = if k >= 1 && owner.form_dim(k - 1) > 0 && n > 0 {
        let d = d_matrix(&owner, k - 1);
        let gram = d.gram_weighted(w_k);
        let mut rhs = vec![0.0; owner.form_dim(k - 1)];
        for j in 0..rhs.len() {
            let mut acc = 0.0;
            for i in 0..n {
                acc += d.get(i, j) * w_k[i] * alpha.values()[i];
            }
            rhs[j] = acc;
        }
        let x = pseudo_solve(&gram, &rhs, RANK_REL_TOL);
        KForm::from_values(owner.clone(), k, d.matvec(&x)).unwrap()
    } else {
        KForm::zero(owner.clone(), k)
    };

    // Coexact part: projection onto im(δ_{k+1}); the normal matrix
    // W_{k+1} D_k W_k^{-1} D_k^T W_{k+1} is symmetric PSD.
    let coexact = if owner.form_dim(k + 1) > 0 && n > 0 {
        let d = d_matrix(&owner, k);
        let m = owner.form_dim(k + 1);
        let w_hi = owner.weights(k + 2);
        let mut normal = Matrix::zeros(m, m);
        for a in 0..m {
            for b in a..m {
                let mut acc = 0.0;
                for i in 0..n {
                    acc += w_hi[a] * d.get(a, i) / w_k[i] * d.get(b, i) * w_hi[b];
                }
                normal.set(a, b, acc);
                normal.set(b, a, acc);
            }
        }
        let mut rhs = vec![0.0; m];
        for a in 0..m {
            let mut acc = 0.0;
            for i in 0..n {
                acc += w_hi[a] * d.get(a, i) * alpha.values()[i];
            }
            rhs[a] = acc;
        }
        let y = pseudo_solve(&normal, &rhs, RANK_REL_TOL);
        // δy with δ = W_k^{-1} D_k^T W_{k+1}.
        let mut vals = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for a in 0..m {
                acc += d.get(a, i) * w_hi[a] * y[a];
            }
            vals[i] = acc / w_k[i];
        }
        KForm::from_values(owner.clone(), k, vals).unwrap()
    } else {
        KForm::zero(owner.clone(), k)
    };

    let harmonic = alpha.sub(&exact).unwrap().sub(&coexact).unwrap();
    (exact, harmonic, coexact)
}

/// Betti numbers `b_0..b_max_r` as kernel dimensions of the Hodge
/// Laplacians, with the relative rank threshold.
pub fn betti_numbers(owner: &Arc<WeightedGraph>, max_r: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(max_r + 1);
    for r in 0..=max_r {
        let n = owner.form_dim(r);
        if n == 0 {
            out.push(0);
            continue;
        }
        // Conjugate by W^{1/2} to get a symmetric matrix with the same rank.
        let lap = hodge_laplacian(owner, r);
        let w = owner.weights(r + 1);
        let sym = Matrix::from_fn(n, n, |i, j| {
            w[i].sqrt() * lap.matrix().get(i, j) / w[j].sqrt()
        });
        out.push(n - rank_sym(&sym.symmetrized(), RANK_REL_TOL));
    }
    out
}
