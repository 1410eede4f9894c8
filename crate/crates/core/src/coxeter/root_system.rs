use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::types::{CoxeterType, Family};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::numfield::{golden_field, real_cyclotomic_field, two_cos, NfElem, NumberField};
use crate::scalar::Field;

/// A vector of field elements in ambient coordinates.
pub type Vector = Vec<NfElem>;

/// A square matrix over the coefficient field.
pub type Matrix = DenseMatrix<NfElem>;

pub fn dot(a: &[NfElem], b: &[NfElem]) -> NfElem {
    let mut acc = NfElem::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn axpy(a: &NfElem, x: &[NfElem], y: &[NfElem]) -> Vector {
    x.iter().zip(y).map(|(xi, yi)| &(a * xi) + yi).collect()
}

fn scaled(a: &NfElem, x: &[NfElem]) -> Vector {
    x.iter().map(|xi| a * xi).collect()
}

/// Reflection matrix `I - 2 β βᵀ / (β, β)`.
pub fn reflection_matrix(beta: &[NfElem]) -> Matrix {
    let n = beta.len();
    let c = NfElem::from_int(2) / dot(beta, beta);
    DenseMatrix::from_fn(n, n, |i, j| {
        let v = &(&c * &beta[i]) * &beta[j];
        if i == j {
            &NfElem::one() - &v
        } else {
            -v
        }
    })
}

/// Coordinate block of one irreducible factor inside a product realization.
#[derive(Clone, Debug)]
pub struct Component {
    pub family: Family,
    /// First ambient coordinate of this factor.
    pub coord_offset: usize,
    /// Index of this factor's first simple root.
    pub simple_offset: usize,
}

/// Roots, reflections and weights of a finite Coxeter group in its standard realization.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CoxeterType,
    dim: usize,
    field: Option<Arc<NumberField>>,
    components: Vec<Component>,
    simple_roots: Vec<Vector>,
    positive_roots: Vec<Vector>,
    simple_reflections: Vec<Matrix>,
    reflections: Vec<Matrix>,
    weights: Vec<Vector>,
    rho: Vector,
}

struct Realization {
    field: Option<Arc<NumberField>>,
    simple: Vec<Vector>,
    /// Given explicitly for dihedral types so the order is `β(kθ)`, `k = 0..m-1`.
    positive: Option<Vec<Vector>>,
}

fn int_vec(v: &[i64]) -> Vector {
    v.iter().map(|&x| NfElem::from_int(x)).collect()
}

/// Field holding `cos(kπ/m)` and `sin(kπ/m)`: `Q(2cos(2π/N))` with `N = lcm(2m, 4)`.
pub fn dihedral_field(m: u32) -> (Arc<NumberField>, u64) {
    let n = num_integer::lcm(2 * m as u64, 4);
    (real_cyclotomic_field(n), n)
}

/// The unit vector `β(kπ/m) = (cos kπ/m, sin kπ/m)` in the dihedral field.
pub fn dihedral_root(field: &Arc<NumberField>, big_n: u64, m: u32, k: i64) -> Vector {
    let step = (big_n / (2 * m as u64)) as i64;
    let half = NfElem::from_rational(crate::scalar::ratio(1, 2));
    let c = &two_cos(field, big_n, k * step) * &half;
    let s = &two_cos(field, big_n, big_n as i64 / 4 - k * step) * &half;
    vec![c, s]
}

fn realize(f: Family) -> Realization {
    match f {
        Family::A(n) => Realization {
            field: None,
            simple: (0..n)
                .map(|i| {
                    let mut v = vec![0; n + 1];
                    v[i] = 1;
                    v[i + 1] = -1;
                    int_vec(&v)
                })
                .collect(),
            positive: None,
        },
        Family::B(n) | Family::D(n) => {
            let mut simple: Vec<Vector> = (0..n - 1)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    int_vec(&v)
                })
                .collect();
            let mut last = vec![0; n];
            if matches!(f, Family::B(_)) {
                last[n - 1] = 1;
            } else {
                last[n - 2] = 1;
                last[n - 1] = 1;
            }
            simple.push(int_vec(&last));
            Realization { field: None, simple, positive: None }
        }
        Family::I2(m) => {
            let (field, big_n) = dihedral_field(m);
            let positive: Vec<Vector> = (0..m as i64).map(|k| dihedral_root(&field, big_n, m, k)).collect();
            let simple = vec![positive[0].clone(), positive[m as usize - 1].clone()];
            Realization { field: Some(field), simple, positive: Some(positive) }
        }
        Family::H3 => {
            let field = golden_field();
            let t = NfElem::generator(&field);
            let t2 = &t * &t;
            // x1 - τ x2 - τ² x3 has length 2τ; normalize so all roots are unit vectors.
            let inv = (&t * &NfElem::from_int(2)).inv();
            let a1 = vec![inv.clone(), -(&t * &inv), -(&t2 * &inv)];
            Realization { field: Some(field), simple: vec![a1, int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1])], positive: None }
        }
    }
}

impl RootSystem {
    pub fn build(ctype: &CoxeterType) -> Result<Self> {
        let dim = ctype.ambient_dim();
        let mut field: Option<Arc<NumberField>> = None;
        let mut components = Vec::new();
        let mut simple_roots = Vec::new();
        let mut positive_roots = Vec::new();
        let (mut coord_offset, mut simple_offset) = (0, 0);
        for &fam in ctype.components() {
            let r = realize(fam);
            if let Some(f) = &r.field {
                match &field {
                    Some(g) if !g.same_as(f) => {
                        return Err(Error::UnsupportedType(format!(
                            "{ctype}: factors need different coefficient fields, only one non-rational field is supported"
                        )))
                    }
                    Some(_) => {}
                    None => field = Some(f.clone()),
                }
            }
            let d = fam.ambient_dim();
            let pad = |v: &Vector| -> Vector {
                let mut out = vec![NfElem::zero(); dim];
                out[coord_offset..coord_offset + d].clone_from_slice(v);
                out
            };
            let simple: Vec<Vector> = r.simple.iter().map(pad).collect();
            let positive = match r.positive {
                Some(p) => p.iter().map(pad).collect(),
                None => positive_orbit(&simple),
            };
            if positive.len() != fam.reflection_count() {
                return Err(Error::Inconsistent(format!("{fam}: {} positive roots, expected {}", positive.len(), fam.reflection_count())));
            }
            components.push(Component { family: fam, coord_offset, simple_offset });
            simple_roots.extend(simple);
            positive_roots.extend(positive);
            coord_offset += d;
            simple_offset += fam.rank();
        }
        let simple_reflections: Vec<Matrix> = simple_roots.iter().map(|a| reflection_matrix(a)).collect();
        let reflections: Vec<Matrix> = positive_roots.iter().map(|b| reflection_matrix(b)).collect();
        let weights = fundamental_weights(&simple_roots);
        let mut rho = vec![NfElem::zero(); dim];
        for w in &weights {
            rho = axpy(&NfElem::one(), w, &rho);
        }
        let rs = RootSystem { ctype: ctype.clone(), dim, field, components, simple_roots, positive_roots, simple_reflections, reflections, weights, rho };
        rs.verify()?;
        Ok(rs)
    }

    fn verify(&self) -> Result<()> {
        for (beta, s) in self.positive_roots.iter().zip(&self.reflections) {
            if s.mul(s)? != DenseMatrix::identity(self.dim) {
                return Err(Error::Inconsistent("reflection is not an involution".into()));
            }
            let sb = s.mul_vec(beta)?;
            if sb != beta.iter().map(|x| -x).collect::<Vector>() {
                return Err(Error::Inconsistent("reflection does not negate its root".into()));
            }
            if !self.is_positive_root_vector(beta) {
                return Err(Error::Inconsistent("listed positive root is not positive".into()));
            }
        }
        for (i, w) in self.weights.iter().enumerate() {
            for (j, a) in self.simple_roots.iter().enumerate() {
                let pairing = &(&dot(w, a) * &NfElem::from_int(2)) / &dot(a, a);
                let want = if i == j { NfElem::one() } else { NfElem::zero() };
                if pairing != want {
                    return Err(Error::Inconsistent("fundamental weights are not dual to the simple coroots".into()));
                }
            }
        }
        Ok(())
    }

    pub fn coxeter_type(&self) -> &CoxeterType {
        &self.ctype
    }

    /// Number of ambient coordinates.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn simple_reflections(&self) -> &[Matrix] {
        &self.simple_reflections
    }

    /// Reflection matrices, parallel to [`positive_roots`](Self::positive_roots).
    pub fn reflections(&self) -> &[Matrix] {
        &self.reflections
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.weights
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.ctype.degrees()
    }

    pub fn order(&self) -> u64 {
        self.ctype.order()
    }

    /// Socle degree of the coinvariant ring: the number of reflections.
    pub fn reflection_count(&self) -> usize {
        self.positive_roots.len()
    }

    /// Sum of the fundamental weights; pairs positively with every positive root.
    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn is_positive_root_vector(&self, beta: &[NfElem]) -> bool {
        dot(&self.rho, beta).is_positive()
    }

    /// `sum coeffs[i] * ϖ_i`.
    pub fn weight_combination(&self, coeffs: &[NfElem]) -> Result<Vector> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: coeffs.len() });
        }
        let mut v = vec![NfElem::zero(); self.dim];
        for (c, w) in coeffs.iter().zip(&self.weights) {
            v = axpy(c, w, &v);
        }
        Ok(v)
    }

    fn check_dim(&self, v: &[NfElem]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// Whether the reflection `s_β` fixes `ℓ`, i.e. `(ℓ, β) = 0`.
    pub fn is_fixed_by_reflection(&self, l: &[NfElem], beta: &[NfElem]) -> Result<bool> {
        self.check_dim(l)?;
        self.check_dim(beta)?;
        Ok(dot(l, beta).is_zero())
    }

    /// Indices of the positive roots whose reflections fix `ℓ`.
    pub fn fixing_reflections(&self, l: &[NfElem]) -> Result<Vec<usize>> {
        self.check_dim(l)?;
        Ok((0..self.positive_roots.len()).filter(|&i| dot(l, &self.positive_roots[i]).is_zero()).collect())
    }

    /// The reflection criterion: `ℓ` lies on no mirror.
    pub fn sle_criterion(&self, l: &[NfElem]) -> Result<bool> {
        Ok(self.fixing_reflections(l)?.is_empty())
    }

    /// Moves `ℓ` into the closed fundamental chamber by simple reflections.
    ///
    /// Returns `(w, w(ℓ))` with `w` as a matrix.
    pub fn chamber_representative(&self, l: &[NfElem]) -> Result<(Matrix, Vector)> {
        self.check_dim(l)?;
        let mut w = DenseMatrix::identity(self.dim);
        let mut v = l.to_vec();
        // Each step lowers the number of positive roots pairing negatively with v.
        while let Some(i) = (0..self.rank()).find(|&i| dot(&v, &self.simple_roots[i]).is_negative()) {
            v = self.simple_reflections[i].mul_vec(&v)?;
            w = self.simple_reflections[i].mul(&w)?;
        }
        Ok((w, v))
    }

    /// Coefficients of `v` in the basis of simple roots, if `v` lies in their span.
    pub fn simple_root_coords(&self, v: &[NfElem]) -> Option<Vector> {
        let a = DenseMatrix::from_fn(self.dim, self.rank(), |i, j| self.simple_roots[j][i].clone());
        a.solve(v)
    }

    /// Coefficients of `∏ (1 + t + ... + t^{d_i - 1})`.
    pub fn poincare_polynomial(&self) -> Vec<usize> {
        poincare_from_degrees(&self.degrees())
    }
}

pub fn poincare_from_degrees(degrees: &[u32]) -> Vec<usize> {
    let mut p = vec![1usize];
    for &d in degrees {
        let mut q = vec![0usize; p.len() + d as usize - 1];
        for (i, &c) in p.iter().enumerate() {
            for j in 0..d as usize {
                q[i + j] += c;
            }
        }
        p = q;
    }
    p
}

/// Positive roots of the orbit of the simple roots under the simple reflections, in discovery order.
fn positive_orbit(simple: &[Vector]) -> Vec<Vector> {
    let refl: Vec<Matrix> = simple.iter().map(|a| reflection_matrix(a)).collect();
    let weights = fundamental_weights(simple);
    let n = simple[0].len();
    let mut rho = vec![NfElem::zero(); n];
    for w in &weights {
        rho = axpy(&NfElem::one(), w, &rho);
    }
    let mut seen: HashSet<Vector> = simple.iter().cloned().collect();
    let mut queue: Vec<Vector> = simple.to_vec();
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head].clone();
        head += 1;
        for s in &refl {
            let w = s.mul_vec(&v).unwrap();
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    queue.into_iter().filter(|b| dot(&rho, b).is_positive()).collect()
}

/// `ϖ_i = sum_k C_ik α_k` with `C = D G⁻¹`, `G` the Gram matrix and `D = diag(|α_j|² / 2)`.
fn fundamental_weights(simple: &[Vector]) -> Vec<Vector> {
    let r = simple.len();
    let gram = DenseMatrix::from_fn(r, r, |i, j| dot(&simple[i], &simple[j]));
    let ginv = gram.inverse().expect("simple roots are linearly independent");
    let half = NfElem::from_rational(crate::scalar::ratio(1, 2));
    (0..r)
        .map(|i| {
            let di = &gram[(i, i)] * &half;
            let mut v = vec![NfElem::zero(); simple[0].len()];
            for k in 0..r {
                let c = &di * &ginv[(i, k)];
                v = axpy(&c, &simple[k], &v);
            }
            v
        })
        .collect()
}

/// Projection helper used by samplers: `v - (v, β)/(β, β) β`, which lies in `β⊥`.
pub fn project_to_mirror(v: &[NfElem], beta: &[NfElem]) -> Vector {
    let c = -(&dot(v, beta) / &dot(beta, beta));
    axpy(&c, beta, v)
}

/// Scales `v` by `c`.
pub fn scale_vector(c: &NfElem, v: &[NfElem]) -> Vector {
    scaled(c, v)
}
