//! Dynamical so(2,4) of the hydrogen atom in the radial Weyl ring.

use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::Result;
use crate::landau::{self, Presentation};
use crate::lie::{self, ClosureReport, GeneratorTable, IndexSet, LieElement, Rule};
use crate::scalar::Scalar;
use crate::weyl::{Sig, Signature, WeylElement};

pub fn radial_signature() -> Sig {
    Signature::radial("radial", &["x1", "x2", "x3"], &["d1", "d2", "d3"])
}

/// Operator ordering of the products `r·p` and `x p² − 2p(x·p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    /// Position factors on the left, as the formulas are written.
    Printed,
    /// Weyl-symmetrized products.
    Symmetrized,
}

#[derive(Clone, Debug)]
pub struct HydrogenGenerators {
    pub ordering: Ordering,
    pub l: [WeylElement; 3],
    pub gamma: [WeylElement; 3],
    pub d: WeylElement,
    pub a0: WeylElement,
    pub b0: WeylElement,
    pub a: [WeylElement; 3],
    pub b: [WeylElement; 3],
}

fn sym(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    Ok(a.anticommutator(b)?.scale(&Scalar::frac(1, 2)))
}

pub fn build_hydrogen_generators(ordering: Ordering) -> Result<HydrogenGenerators> {
    let s = radial_signature();
    let x: Vec<WeylElement> = (0..3).map(|k| WeylElement::position(&s, k)).collect();
    let p: Vec<WeylElement> = (0..3).map(|k| WeylElement::momentum(&s, k)).collect();
    let r = WeylElement::r(&s)?;
    let one = WeylElement::one(&s);
    let half = Scalar::frac(1, 2);
    let mut p2 = WeylElement::zero(&s);
    let mut xp = WeylElement::zero(&s);
    for k in 0..3 {
        p2 = p2.try_add(&p[k].multiply(&p[k])?)?;
        xp = xp.try_add(&x[k].multiply(&p[k])?)?;
    }
    let cross = |i: usize, j: usize| -> Result<WeylElement> { x[i].multiply(&p[j])?.try_sub(&x[j].multiply(&p[i])?) };
    let l = [cross(1, 2)?, cross(2, 0)?, cross(0, 1)?];
    let d = xp.try_sub(&one.scale(&Scalar::i()))?;
    let (rp2, gamma, bpa) = match ordering {
        Ordering::Printed => {
            let gamma = [r.multiply(&p[0])?, r.multiply(&p[1])?, r.multiply(&p[2])?];
            let bpa = |k: usize| -> Result<WeylElement> {
                x[k].multiply(&p2)?.try_sub(&p[k].multiply(&xp)?.scale(&Scalar::from_int(2)))
            };
            (r.multiply(&p2)?, gamma, [bpa(0)?, bpa(1)?, bpa(2)?])
        }
        Ordering::Symmetrized => {
            let gamma = [sym(&r, &p[0])?, sym(&r, &p[1])?, sym(&r, &p[2])?];
            let bpa = |k: usize| -> Result<WeylElement> {
                sym(&x[k], &p2)?.try_sub(&sym(&p[k], &xp)?.scale(&Scalar::from_int(2)))
            };
            (sym(&r, &p2)?, gamma, [bpa(0)?, bpa(1)?, bpa(2)?])
        }
    };
    let b0 = rp2.try_add(&r)?.scale(&half);
    let a0 = rp2.try_sub(&r)?.scale(&half);
    let mk = |k: usize, sign: i64| -> Result<WeylElement> {
        bpa[k].try_add(&x[k].scale(&Scalar::from_int(sign)))?.radial_reduce().map(|e| e.scale(&half))
    };
    Ok(HydrogenGenerators {
        ordering,
        l,
        gamma,
        d,
        a0,
        b0,
        b: [mk(0, 1)?, mk(1, 1)?, mk(2, 1)?],
        a: [mk(0, -1)?, mk(1, -1)?, mk(2, -1)?],
    })
}

/// `L₋₁₀ = B₀`, `L₋₁ᵢ = Bᵢ`, `L₋₁₅ = D`, `L₀ᵢ = Γᵢ`, `L₀₅ = A₀`, `L₁₂ = L₃`, `L₁₃ = −L₂`, `L₂₃ = L₁`, `Lᵢ₅ = Aᵢ`.
pub fn map_to_lab(h: &HydrogenGenerators) -> Result<GeneratorTable<WeylElement>> {
    let mut t = GeneratorTable::new(IndexSet::so24());
    t.insert(-1, 0, h.b0.clone())?;
    t.insert(-1, 5, h.d.clone())?;
    t.insert(0, 5, h.a0.clone())?;
    for i in 0..3 {
        let k = i as i8 + 1;
        t.insert(-1, k, h.b[i].clone())?;
        t.insert(0, k, h.gamma[i].clone())?;
        t.insert(k, 5, h.a[i].clone())?;
    }
    t.insert(1, 2, h.l[2].clone())?;
    t.insert(1, 3, -&h.l[1])?;
    t.insert(2, 3, h.l[0].clone())?;
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct HydrogenReport {
    pub ordering: Ordering,
    pub closure: ClosureReport,
    pub max_denominator_power: u8,
}

/// All 105 brackets under the conformal rule, and the largest `(x²)⁻ᵐ` seen.
pub fn verify_so24(ordering: Ordering) -> Result<HydrogenReport> {
    let table = map_to_lab(&build_hydrogen_generators(ordering)?)?;
    let closure = lie::verify_closure(&table, Rule::ConformalPlus)?;
    let gens = table.generators();
    let mut worst = 0;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            worst = worst.max(gens[i].1.commutator(&gens[j].1)?.max_denominator_power());
        }
    }
    Ok(HydrogenReport { ordering, closure, max_denominator_power: worst })
}

/// Printed ordering first; the symmetrized one only if that fails.
pub fn closing_ordering() -> Result<(Ordering, HydrogenReport)> {
    let printed = verify_so24(Ordering::Printed)?;
    if printed.closure.closes() {
        return Ok((Ordering::Printed, printed));
    }
    let sym = verify_so24(Ordering::Symmetrized)?;
    Ok((if sym.closure.closes() { Ordering::Symmetrized } else { Ordering::Printed }, sym))
}

/// Closure of `{A₀, D, B₀}` and the relations among the conformal Hamiltonians.
pub fn radial_so12(h: &HydrogenGenerators) -> Result<Vec<Identity>> {
    let s = h.d.signature().clone();
    let r = WeylElement::r(&s)?;
    let one = WeylElement::one(&s);
    let mut p2 = WeylElement::zero(&s);
    for k in 0..3 {
        let p = WeylElement::momentum(&s, k);
        p2 = p2.try_add(&p.multiply(&p)?)?;
    }
    let half = Scalar::frac(1, 2);
    let triple = [h.a0.clone(), h.d.clone(), h.b0.clone()];
    let closes = lie::structure_constants(&triple)?.is_some();
    let dr = h.d.commutator(&h.b0.try_sub(&h.a0)?)?;
    Ok(vec![
        Identity::flag("hydrogen: {A0, D, B0} closes", closes),
        Identity::exact("hydrogen: B0 = r(p²+1)/2", &h.b0.try_sub(&r.multiply(&p2.try_add(&one)?)?.scale(&half))?),
        Identity::exact("hydrogen: A0 = r(p²-1)/2", &h.a0.try_sub(&r.multiply(&p2.try_sub(&one)?)?.scale(&half))?),
        Identity::exact("hydrogen: B0 - A0 = r", &h.b0.try_sub(&h.a0)?.try_sub(&r)?),
        Identity::exact("hydrogen: B0 + A0 = r p²", &h.b0.try_add(&h.a0)?.try_sub(&r.multiply(&p2)?)?),
        Identity::exact(
            "hydrogen: (B0 - A0) + (B0 + A0) = 2 B0",
            &h.b0.try_sub(&h.a0)?.try_add(&h.b0.try_add(&h.a0)?)?.try_sub(&h.b0.scale(&Scalar::from_int(2)))?,
        ),
        Identity::flag("hydrogen: [D, r] lies in span{A0, D, B0}", lie::decompose(&dr, &triple).is_some()),
    ])
}

/// Generators with indices in `{−1, 0, 1, 2, 5}`.
pub fn reduce_to_2d(table: &GeneratorTable<WeylElement>) -> Result<GeneratorTable<WeylElement>> {
    table.without(&[3])
}

/// Structure constants of the reduced set (with `5 → 3`) against those of `{−m_ab}`.
pub fn compare_with_landau(reduced: &GeneratorTable<WeylElement>) -> Result<Identity> {
    let renamed = reduced.renamed(|l| if l == 5 { 3 } else { l })?;
    let m = landau::dirac_generators(Presentation::Phase)?;
    let hyd: Vec<WeylElement> = renamed.generators().into_iter().map(|(_, g)| g).collect();
    let lan: Vec<WeylElement> =
        IndexSet::so23().pairs().into_iter().map(|(a, b)| m.get(a, b).times(&Scalar::from_int(-1))).collect();
    let same = match (lie::structure_constants(&hyd)?, lie::structure_constants(&lan)?) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    };
    Ok(Identity::flag("hydrogen: reduced structure constants equal those of the transposed m table", same))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_forms() {
        let h = build_hydrogen_generators(Ordering::Printed).unwrap();
        let s = radial_signature();
        let mut xp = WeylElement::zero(&s);
        for k in 0..3 {
            xp = &xp + &(&WeylElement::position(&s, k) * &WeylElement::momentum(&s, k));
        }
        assert_eq!(h.d, &xp - &WeylElement::constant(&s, Scalar::i()));
        assert_eq!(h.b0.try_sub(&h.a0).unwrap(), WeylElement::r(&s).unwrap());
    }

    #[test]
    fn dictionary_entries() {
        let h = build_hydrogen_generators(Ordering::Printed).unwrap();
        let t = map_to_lab(&h).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.get(1, 2).unwrap(), h.l[2]);
        assert_eq!(t.get(-1, 5).unwrap(), h.d);
        assert_eq!(t.get(2, 5).unwrap(), h.a[1]);
    }

    #[test]
    fn so24_closes() {
        let r = verify_so24(Ordering::Printed).unwrap();
        assert_eq!(r.closure.pairs.len(), 105);
        assert!(r.closure.closes(), "{:?}", r.closure.failures());
        assert!(r.max_denominator_power <= 3);
    }

    #[test]
    fn radial_subalgebra() {
        let h = build_hydrogen_generators(Ordering::Printed).unwrap();
        let r = radial_so12(&h).unwrap();
        assert!(r.iter().all(|i| i.holds), "{r:?}");
    }

    #[test]
    fn planar_reduction() {
        let t = map_to_lab(&build_hydrogen_generators(Ordering::Printed).unwrap()).unwrap();
        let red = reduce_to_2d(&t).unwrap();
        assert_eq!(red.generators().len(), 10);
        assert!(lie::verify_closure(&red, Rule::ConformalPlus).unwrap().closes());
        assert!(compare_with_landau(&red).unwrap().holds);
    }
}
