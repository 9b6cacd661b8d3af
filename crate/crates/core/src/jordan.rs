//! The Jordan algebras of 2×2 complex Hermitian and real symmetric matrices
//! in Pauli coordinates, their triple product and structure constants.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{rational_string, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn dim(self) -> usize {
        match self {
            Field::Real => 3,
            Field::Complex => 4,
        }
    }

    /// Diagonal of `g = diag(+, −, …)`.
    pub fn metric(self, mu: usize) -> i64 {
        if mu == 0 {
            1
        } else {
            -1
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

/// `x = x^μ σ_μ` with real rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanElement {
    field: Field,
    coords: Vec<Rational>,
}

fn gauss(re: Rational, im: Rational) -> Scalar {
    Scalar::gauss(re, im)
}

impl JordanElement {
    pub fn new(field: Field, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != field.dim() {
            return Err(Error::Invalid(format!("{} Jordan element needs {} coordinates", field.as_str(), field.dim())));
        }
        Ok(JordanElement { field, coords })
    }

    pub fn from_ints(field: Field, coords: &[i64]) -> Result<Self> {
        JordanElement::new(field, coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(field: Field) -> Self {
        JordanElement { field, coords: vec![Rational::zero(); field.dim()] }
    }

    /// Basis element `σ_μ` (real case: `σ₀, σ₁, σ₃` as `0, 1, 2`).
    pub fn basis(field: Field, mu: usize) -> Self {
        let mut e = JordanElement::zero(field);
        e.coords[mu] = Rational::one();
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        let x = &self.coords;
        let z = Rational::zero();
        let rows = match self.field {
            Field::Complex => vec![
                vec![gauss(&x[0] + &x[3], z.clone()), gauss(x[1].clone(), -x[2].clone())],
                vec![gauss(x[1].clone(), x[2].clone()), gauss(&x[0] - &x[3], z)],
            ],
            Field::Real => vec![
                vec![gauss(&x[0] + &x[2], z.clone()), gauss(x[1].clone(), z.clone())],
                vec![gauss(x[1].clone(), z.clone()), gauss(&x[0] - &x[2], z)],
            ],
        };
        ExactMatrix::from_rows(rows)
    }

    /// Coordinates `½ tr(σ_μ m)`; `m` must be Hermitian (symmetric in the real case).
    pub fn from_matrix(field: Field, m: &ExactMatrix) -> Result<Self> {
        let halfsum = |a: &Scalar, b: &Scalar| (a + b).scale_rational(&Rational::new(1.into(), 2.into()));
        let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let mut vals = vec![halfsum(m00, m11), halfsum(m01, m10)];
        if field == Field::Complex {
            // ½ tr(σ₂ m) = ½ i (m01 − m10)
            vals.push(&(m01 - m10) * &Scalar::imag_frac(1, 2));
        } else if !(m01 - m10).is_zero() {
            return Err(Error::Invalid("real Jordan element must be symmetric".into()));
        }
        vals.push(halfsum(m00, &-m11));
        let coords = vals
            .into_iter()
            .map(|v| v.as_rational().cloned().ok_or_else(|| Error::Invalid("matrix is not Hermitian".into())))
            .collect::<Result<Vec<_>>>()?;
        JordanElement::new(field, coords)
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(JordanElement { field: self.field, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        JordanElement { field: self.field, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `a∘b = ½(ab + ba)`.
    pub fn product(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let m = self.to_matrix().anticommutator(&o.to_matrix()).scale(&Scalar::frac(1, 2));
        JordanElement::from_matrix(self.field, &m)
    }

    /// `(abc) = a∘(b∘c) − b∘(a∘c) + (a∘b)∘c`.
    pub fn triple(&self, b: &Self, c: &Self) -> Result<Self> {
        let t1 = self.product(&b.product(c)?)?;
        let t2 = b.product(&self.product(c)?)?;
        let t3 = self.product(b)?.product(c)?;
        t1.sub(&t2)?.add(&t3)
    }

    /// `det x = g_{μν} x^μ x^ν`.
    pub fn minkowski_norm(&self) -> Rational {
        self.coords
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (mu, x)| acc + x * x * Rational::from_integer(self.field.metric(mu).into()))
    }

    pub fn determinant(&self) -> Rational {
        let m = self.to_matrix();
        let d = &(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0));
        d.as_rational().cloned().expect("Hermitian determinant is real")
    }

    /// Drop the `σ₂` coordinate: `(x⁰, x¹, x³) ↦ (y⁰, y¹, y²)`.
    pub fn project_real(&self) -> Self {
        match self.field {
            Field::Real => self.clone(),
            Field::Complex => JordanElement {
                field: Field::Real,
                coords: vec![self.coords[0].clone(), self.coords[1].clone(), self.coords[3].clone()],
            },
        }
    }

    /// Embed a real element with zero `σ₂` coordinate.
    pub fn embed_complex(&self) -> Self {
        match self.field {
            Field::Complex => self.clone(),
            Field::Real => JordanElement {
                field: Field::Complex,
                coords: vec![self.coords[0].clone(), self.coords[1].clone(), Rational::zero(), self.coords[2].clone()],
            },
        }
    }
}

/// `Σ^{βρ}_{αγ}`, stored as `[β][ρ][α][γ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleConstants {
    pub field: Field,
    data: Vec<Rational>,
}

impl TripleConstants {
    fn idx(&self, b: usize, r: usize, a: usize, c: usize) -> usize {
        let n = self.field.dim();
        ((b * n + r) * n + a) * n + c
    }

    pub fn get(&self, b: usize, r: usize, a: usize, c: usize) -> &Rational {
        &self.data[self.idx(b, r, a, c)]
    }

    pub fn dim(&self) -> usize {
        self.field.dim()
    }

    /// `δ^ρ_γ δ^β_α + δ^ρ_α δ^β_γ − g^{βρ} g_{αγ}`.
    pub fn closed_form(field: Field) -> Self {
        let n = field.dim();
        let d = |x: usize, y: usize| i64::from(x == y);
        let mut data = Vec::with_capacity(n.pow(4));
        for b in 0..n {
            for r in 0..n {
                for a in 0..n {
                    for c in 0..n {
                        let v = d(r, c) * d(b, a) + d(r, a) * d(b, c) - d(b, r) * field.metric(b) * d(a, c) * field.metric(a);
                        data.push(Rational::from_integer(v.into()));
                    }
                }
            }
        }
        TripleConstants { field, data }
    }

    /// `(e_α e_β e_γ)^ρ = Σ^{βρ}_{αγ}` from the triple product.
    pub fn computed(field: Field) -> Result<Self> {
        let n = field.dim();
        let mut t = TripleConstants { field, data: vec![Rational::zero(); n.pow(4)] };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let e = JordanElement::basis(field, a).triple(&JordanElement::basis(field, b), &JordanElement::basis(field, c))?;
                    for r in 0..n {
                        let k = t.idx(b, r, a, c);
                        t.data[k] = e.coords[r].clone();
                    }
                }
            }
        }
        Ok(t)
    }

    /// Nested `[β][ρ][α][γ]` arrays of `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim();
        serde_json::Value::Array(
            (0..n)
                .map(|b| {
                    serde_json::Value::Array(
                        (0..n)
                            .map(|r| {
                                serde_json::Value::Array(
                                    (0..n)
                                        .map(|a| {
                                            serde_json::Value::Array(
                                                (0..n).map(|c| serde_json::Value::String(rational_string(self.get(b, r, a, c)))).collect(),
                                            )
                                        })
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// Computed table, closed form, and the number of agreeing entries.
#[derive(Clone, Debug)]
pub struct StructureComparison {
    pub computed: TripleConstants,
    pub closed_form: TripleConstants,
    pub matching: usize,
    pub total: usize,
}

impl StructureComparison {
    pub fn matches(&self) -> bool {
        self.matching == self.total
    }
}

pub fn structure_constants(field: Field) -> Result<StructureComparison> {
    let computed = TripleConstants::computed(field)?;
    let closed_form = TripleConstants::closed_form(field);
    let total = computed.data.len();
    let matching = computed.data.iter().zip(&closed_form.data).filter(|(a, b)| a == b).count();
    Ok(StructureComparison { computed, closed_form, matching, total })
}

/// Real table equals the complex one restricted to `{0, 1, 3}`.
pub fn real_table_is_restriction() -> Result<bool> {
    let c = TripleConstants::computed(Field::Complex)?;
    let r = TripleConstants::computed(Field::Real)?;
    let map = [0usize, 1, 3];
    for b in 0..3 {
        for rho in 0..3 {
            for a in 0..3 {
                for g in 0..3 {
                    if r.get(b, rho, a, g) != c.get(map[b], map[rho], map[a], map[g]) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Triple products of `σ₂`-free basis elements commute with the projection.
pub fn projection_commutes() -> Result<bool> {
    for &a in &[0usize, 1, 3] {
        for &b in &[0usize, 1, 3] {
            for &c in &[0usize, 1, 3] {
                let e = |k| JordanElement::basis(Field::Complex, k);
                let up = e(a).triple(&e(b), &e(c))?.project_real();
                let down = e(a).project_real().triple(&e(b).project_real(), &e(c).project_real())?;
                if up != down {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn random_element(field: Field, rng: &mut impl Rng) -> JordanElement {
    let coords = (0..field.dim()).map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into())).collect();
    JordanElement { field, coords }
}

/// Commutativity, the Jordan identity, `(abc) = (cba)` and the five-term triple identity
/// `(ab(cdx)) − (cd(abx)) = (a(dcb)x) − ((cda)bx)` on seeded random tuples.
pub fn verify_jordan_identities(field: Field, trials: usize, seed: u64) -> Result<Vec<Identity>> {
    if trials == 0 {
        return Err(Error::Invalid("trials must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = [true; 4];
    for _ in 0..trials {
        let [a, b, c, d, x] = std::array::from_fn(|_| random_element(field, &mut rng));
        ok[0] &= a.product(&b)? == b.product(&a)?;
        let a2 = a.product(&a)?;
        ok[1] &= a.product(&a2.product(&b)?)? == a2.product(&a.product(&b)?)?;
        ok[2] &= a.triple(&b, &c)? == c.triple(&b, &a)?;
        let lhs = a.triple(&b, &c.triple(&d, &x)?)?.sub(&c.triple(&d, &a.triple(&b, &x)?)?)?;
        let rhs = a.triple(&d.triple(&c, &b)?, &x)?.sub(&c.triple(&d, &a)?.triple(&b, &x)?)?;
        ok[3] &= lhs == rhs;
    }
    let f = field.as_str();
    Ok(vec![
        Identity::flag(format!("jordan/{f}: commutativity ({trials} trials)"), ok[0]),
        Identity::flag(format!("jordan/{f}: a∘(a²∘b) = a²∘(a∘b) ({trials} trials)"), ok[1]),
        Identity::flag(format!("jordan/{f}: (abc) = (cba) ({trials} trials)"), ok[2]),
        Identity::flag(format!("jordan/{f}: five-term triple identity ({trials} trials)"), ok[3]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(mu: usize) -> JordanElement {
        JordanElement::basis(Field::Complex, mu)
    }

    #[test]
    fn pauli_products() {
        assert_eq!(s(1).product(&s(1)).unwrap(), s(0));
        assert_eq!(s(0).product(&s(3)).unwrap(), s(3));
        assert!(s(1).product(&s(3)).unwrap().is_zero());
    }

    #[test]
    fn triple_examples() {
        assert_eq!(s(0).triple(&s(0), &s(0)).unwrap(), s(0));
        assert_eq!(s(1).triple(&s(1), &s(3)).unwrap(), s(3));
        assert_eq!(s(1).triple(&s(3), &s(1)).unwrap(), s(3).scale(&-Rational::one()));
    }

    #[test]
    fn field_mismatch() {
        assert!(matches!(s(0).product(&JordanElement::basis(Field::Real, 0)), Err(Error::FieldMismatch)));
    }

    #[test]
    fn structure_tables() {
        let c = structure_constants(Field::Complex).unwrap();
        assert_eq!((c.matching, c.total), (256, 256));
        let r = structure_constants(Field::Real).unwrap();
        assert_eq!((r.matching, r.total), (81, 81));
        assert_eq!(c.computed.get(0, 0, 0, 0), &Rational::one());
        assert_eq!(c.computed.get(1, 3, 1, 3), &Rational::one());
        assert!(real_table_is_restriction().unwrap());
    }

    #[test]
    fn norms() {
        assert_eq!(s(0).minkowski_norm(), Rational::one());
        let null = JordanElement::from_ints(Field::Complex, &[1, 1, 0, 0]).unwrap();
        assert!(null.minkowski_norm().is_zero());
        assert_eq!(s(3).minkowski_norm(), -Rational::one());
        let y = JordanElement::from_ints(Field::Real, &[3, 1, 2]).unwrap();
        assert_eq!(y.determinant(), y.minkowski_norm());
    }

    #[test]
    fn projection() {
        assert!(s(2).project_real().is_zero());
        assert_eq!(s(0).add(&s(2)).unwrap().project_real(), JordanElement::basis(Field::Real, 0));
        assert!(projection_commutes().unwrap());
    }

    #[test]
    fn jordan_identity_example() {
        let a = JordanElement::from_ints(Field::Complex, &[0, 1, 0, 2]).unwrap();
        let b = s(0);
        let a2 = a.product(&a).unwrap();
        assert_eq!(a.product(&a2.product(&b).unwrap()).unwrap(), a2.product(&a.product(&b).unwrap()).unwrap());
    }

    #[test]
    fn seeded_identities() {
        for f in [Field::Real, Field::Complex] {
            assert!(verify_jordan_identities(f, 8, 42).unwrap().iter().all(|i| i.holds));
        }
    }

    #[test]
    fn table_json_shape() {
        let t = TripleConstants::closed_form(Field::Real).to_json();
        assert_eq!(t[0][0][0][0], serde_json::json!("1"));
        assert_eq!(t.as_array().unwrap().len(), 3);
    }
}
