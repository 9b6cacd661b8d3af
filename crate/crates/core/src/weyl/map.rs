//! Linear changes of generators and adjoint (antilinear anti-automorphism) maps.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Sig, WeylElement};
use crate::error::{Error, Result};

fn expect_linear(sig: &Sig, e: &WeylElement, what: &str) -> Result<()> {
    if !super::same_sig(e.signature(), sig) {
        return Err(Error::SignatureMismatch { left: e.signature().name.clone(), right: sig.name.clone() });
    }
    if e.terms().any(|(m, _)| m.degree() != 1) {
        return Err(Error::NonCanonicalMap(format!("image of {what} is not a linear combination of generators")));
    }
    Ok(())
}

fn check_pairing(
    pos: &[WeylElement],
    der: &[WeylElement],
    unit: &WeylElement,
    flipped: bool,
) -> Result<()> {
    let n = pos.len();
    for j in 0..n {
        for k in 0..n {
            let (a, b) = if flipped { (&pos[k], &der[j]) } else { (&der[j], &pos[k]) };
            let c = a.commutator(b)?;
            let want = if j == k { unit.clone() } else { WeylElement::zero(unit.signature()) };
            if c != want {
                return Err(Error::NonCanonicalMap(format!("pair ({j},{k}) gives {c}")));
            }
            if pos[j].commutator(&pos[k])?.is_zero() && der[j].commutator(&der[k])?.is_zero() {
                continue;
            }
            return Err(Error::NonCanonicalMap(format!("generators {j},{k} of one kind do not commute")));
        }
    }
    Ok(())
}

/// Sends each source generator to a linear combination of target generators.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    source: Sig,
    target: Sig,
    positions: Vec<WeylElement>,
    derivatives: Vec<WeylElement>,
}

impl GeneratorMap {
    /// Validates linearity and all canonical commutators of the images.
    pub fn new(source: &Sig, target: &Sig, positions: Vec<WeylElement>, derivatives: Vec<WeylElement>) -> Result<Self> {
        if source.is_radial() || target.is_radial() {
            return Err(Error::RadialUnsupported(source.name.clone()));
        }
        if positions.len() != source.modes() || derivatives.len() != source.modes() {
            return Err(Error::NonCanonicalMap("one image per source generator is required".into()));
        }
        for (k, e) in positions.iter().enumerate() {
            expect_linear(target, e, &source.positions[k])?;
        }
        for (k, e) in derivatives.iter().enumerate() {
            expect_linear(target, e, &source.derivatives[k])?;
        }
        check_pairing(&positions, &derivatives, &WeylElement::one(target), false)?;
        Ok(GeneratorMap { source: Arc::clone(source), target: Arc::clone(target), positions, derivatives })
    }

    pub fn identity(sig: &Sig) -> Result<Self> {
        let n = sig.modes();
        GeneratorMap::new(
            sig,
            sig,
            (0..n).map(|k| WeylElement::position(sig, k)).collect(),
            (0..n).map(|k| WeylElement::derivative(sig, k)).collect(),
        )
    }

    pub fn source(&self) -> &Sig {
        &self.source
    }

    pub fn target(&self) -> &Sig {
        &self.target
    }

    /// Express `e` in the target generators, renormal-ordered.
    pub fn apply(&self, e: &WeylElement) -> Result<WeylElement> {
        if !super::same_sig(e.signature(), &self.source) {
            return Err(Error::SignatureMismatch { left: e.signature().name.clone(), right: self.source.name.clone() });
        }
        let mut cache: HashMap<(bool, usize, u8), WeylElement> = HashMap::new();
        let mut power = |der: bool, k: usize, n: u8| -> Result<WeylElement> {
            if let Some(v) = cache.get(&(der, k, n)) {
                return Ok(v.clone());
            }
            let base = if der { &self.derivatives[k] } else { &self.positions[k] };
            let v = base.pow(n as u32)?;
            cache.insert((der, k, n), v.clone());
            Ok(v)
        };
        let mut acc = WeylElement::zero(&self.target);
        for (m, c) in e.terms() {
            let mut t = WeylElement::constant(&self.target, c.clone());
            for (k, &a) in m.pos.iter().enumerate() {
                if a > 0 {
                    t = t.multiply(&power(false, k, a)?)?;
                }
            }
            for (k, &b) in m.der.iter().enumerate() {
                if b > 0 {
                    t = t.multiply(&power(true, k, b)?)?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// `other ∘ self`: apply `self`, then `other`.
    pub fn then(&self, other: &GeneratorMap) -> Result<GeneratorMap> {
        let pos = self.positions.iter().map(|e| other.apply(e)).collect::<Result<Vec<_>>>()?;
        let der = self.derivatives.iter().map(|e| other.apply(e)).collect::<Result<Vec<_>>>()?;
        GeneratorMap::new(&self.source, &other.target, pos, der)
    }
}

/// Antilinear anti-automorphism fixed by its values on generators.
#[derive(Clone, Debug)]
pub struct AdjointMap {
    sig: Sig,
    positions: Vec<WeylElement>,
    derivatives: Vec<WeylElement>,
}

impl AdjointMap {
    pub fn new(sig: &Sig, positions: Vec<WeylElement>, derivatives: Vec<WeylElement>) -> Result<Self> {
        if sig.is_radial() {
            return Err(Error::RadialUnsupported(sig.name.clone()));
        }
        if positions.len() != sig.modes() || derivatives.len() != sig.modes() {
            return Err(Error::NonCanonicalMap("one image per generator is required".into()));
        }
        for (k, e) in positions.iter().chain(derivatives.iter()).enumerate() {
            expect_linear(sig, e, &format!("generator {k}"))?;
        }
        // Reversal of order: [∂_j, x_k] = δ becomes [x_k†, ∂_j†] = δ.
        check_pairing(&positions, &derivatives, &WeylElement::one(sig), true)?;
        Ok(AdjointMap { sig: Arc::clone(sig), positions, derivatives })
    }

    /// Positions are creation operators and derivatives their annihilation partners.
    pub fn ladder(sig: &Sig) -> Result<Self> {
        let n = sig.modes();
        AdjointMap::new(
            sig,
            (0..n).map(|k| WeylElement::derivative(sig, k)).collect(),
            (0..n).map(|k| WeylElement::position(sig, k)).collect(),
        )
    }

    /// Real coordinates: `x† = x`, `∂† = −∂`.
    pub fn real_coordinates(sig: &Sig) -> Result<Self> {
        let n = sig.modes();
        AdjointMap::new(
            sig,
            (0..n).map(|k| WeylElement::position(sig, k)).collect(),
            (0..n).map(|k| -WeylElement::derivative(sig, k)).collect(),
        )
    }

    pub fn apply(&self, e: &WeylElement) -> Result<WeylElement> {
        if !super::same_sig(e.signature(), &self.sig) {
            return Err(Error::SignatureMismatch { left: e.signature().name.clone(), right: self.sig.name.clone() });
        }
        let mut acc = WeylElement::zero(&self.sig);
        for (m, c) in e.terms() {
            // (c x^α ∂^β)† = c̄ (∂†)^β (x†)^α
            let mut t = WeylElement::constant(&self.sig, c.conj());
            for (k, &b) in m.der.iter().enumerate() {
                if b > 0 {
                    t = t.multiply(&self.derivatives[k].pow(b as u32)?)?;
                }
            }
            for (k, &a) in m.pos.iter().enumerate() {
                if a > 0 {
                    t = t.multiply(&self.positions[k].pow(a as u32)?)?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Classify `e` as self-adjoint, anti-self-adjoint, or neither.
    pub fn kind(&self, e: &WeylElement) -> Result<AdjointKind> {
        let a = self.apply(e)?;
        Ok(if a == *e {
            AdjointKind::SelfAdjoint
        } else if a == -e {
            AdjointKind::AntiSelfAdjoint
        } else {
            AdjointKind::Other
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjointKind {
    SelfAdjoint,
    AntiSelfAdjoint,
    Other,
}

impl AdjointKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AdjointKind::SelfAdjoint => "self-adjoint",
            AdjointKind::AntiSelfAdjoint => "anti-self-adjoint",
            AdjointKind::Other => "neither",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::weyl::Signature;

    #[test]
    fn identity_map_is_identity() {
        let s = Signature::new("h", &["z", "zb"], &["d", "db"]);
        let z = WeylElement::position(&s, 0);
        let d = WeylElement::derivative(&s, 1);
        let e = &(&z * &d) + &z;
        assert_eq!(GeneratorMap::identity(&s).unwrap().apply(&e).unwrap(), e);
    }

    #[test]
    fn non_canonical_map_is_rejected() {
        let s = Signature::new("h", &["z"], &["d"]);
        let z = WeylElement::position(&s, 0);
        let d = WeylElement::derivative(&s, 0);
        let bad = GeneratorMap::new(&s, &s, vec![z.scale(&Scalar::from_int(2))], vec![d]);
        assert!(matches!(bad, Err(Error::NonCanonicalMap(_))));
    }

    #[test]
    fn ladder_adjoint_of_number_operator() {
        let s = Signature::new("osc", &["a+"], &["a-"]);
        let ap = WeylElement::position(&s, 0);
        let am = WeylElement::derivative(&s, 0);
        let adj = AdjointMap::ladder(&s).unwrap();
        assert_eq!(adj.apply(&ap).unwrap(), am);
        assert_eq!(adj.kind(&(&ap * &am)).unwrap(), AdjointKind::SelfAdjoint);
        let i_ap = ap.scale(&Scalar::i());
        assert_eq!(adj.apply(&i_ap).unwrap(), am.scale(&-Scalar::i()));
    }
}
