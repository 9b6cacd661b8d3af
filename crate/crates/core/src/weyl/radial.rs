//! Canonical form in the radial ring.
//!
//! Within each `(ε, β)` group the terms are put over the common denominator
//! `ρ^M`, and `ρ` is cancelled while it divides the numerator exactly. The
//! division uses lex order, whose leading term for `ρ` is `x₁²`.

use std::collections::BTreeMap;

use super::{add_term, Exps, Monomial, Terms};
use crate::scalar::Scalar;

type Poly = BTreeMap<Exps, Scalar>;

fn poly_add(p: &mut Poly, e: Exps, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let v = p.entry(e.clone()).or_insert_with(Scalar::zero);
    *v = &*v + &c;
    if v.is_zero() {
        p.remove(&e);
    }
}

/// Multiply by `ρ = x₁² + x₂² + x₃²`.
fn times_rho(p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p {
        for i in 0..3 {
            let mut f = e.clone();
            f[i] += 2;
            poly_add(&mut out, f, c.clone());
        }
    }
    out
}

/// Exact quotient by `ρ`, or `None` when `ρ` does not divide `p`.
fn div_rho(p: &Poly) -> Option<Poly> {
    let mut rem = p.clone();
    let mut q = Poly::new();
    while let Some((lead, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead[0] < 2 {
            return None;
        }
        let mut t = lead.clone();
        t[0] -= 2;
        for i in 0..3 {
            let mut f = t.clone();
            f[i] += 2;
            poly_add(&mut rem, f, -&c);
        }
        poly_add(&mut q, t, c);
    }
    Some(q)
}

pub(super) fn normalize(terms: Terms) -> Terms {
    if terms.keys().all(|m| m.inv == 0 && m.radial < 2) {
        return terms;
    }
    // (ε, β) -> [(α, m, c)]
    let mut groups: BTreeMap<(u8, Exps), Vec<(Exps, u8, Scalar)>> = BTreeMap::new();
    for (m, c) in terms {
        groups.entry((m.radial, m.der)).or_default().push((m.pos, m.inv, c));
    }
    let mut out = Terms::new();
    for ((eps, der), items) in groups {
        let top = items.iter().map(|(_, m, _)| *m).max().unwrap_or(0);
        let mut num = Poly::new();
        for (pos, m, c) in items {
            let mut p = Poly::new();
            poly_add(&mut p, pos, c);
            for _ in m..top {
                p = times_rho(&p);
            }
            for (e, v) in p {
                poly_add(&mut num, e, v);
            }
        }
        let mut level = top;
        while level > 0 {
            match div_rho(&num) {
                Some(q) => {
                    num = q;
                    level -= 1;
                }
                None => break,
            }
        }
        for (pos, c) in num {
            add_term(&mut out, Monomial { pos, radial: eps, inv: level, der: der.clone() }, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    #[test]
    fn rho_divides_itself() {
        let mut p = Poly::new();
        poly_add(&mut p, smallvec![0, 0, 0], Scalar::one());
        let r = times_rho(&p);
        assert_eq!(div_rho(&r), Some(p));
    }

    #[test]
    fn x1_squared_not_divisible() {
        let mut p = Poly::new();
        poly_add(&mut p, smallvec![2, 0, 0], Scalar::one());
        assert_eq!(div_rho(&p), None);
    }

    #[test]
    fn cancels_common_factor() {
        // (x1² + x2² + x3²) r / ρ  ->  r
        let mut t = Terms::new();
        for i in 0..3 {
            let mut pos: Exps = smallvec![0, 0, 0];
            pos[i] = 2;
            add_term(&mut t, Monomial { pos, radial: 1, inv: 1, der: smallvec![0, 0, 0] }, Scalar::one());
        }
        let n = normalize(t);
        assert_eq!(n.len(), 1);
        let (m, c) = n.iter().next().unwrap();
        assert_eq!((m.radial, m.inv, c.clone()), (1, 0, Scalar::one()));
    }
}
