//! Multivariate polynomial GCD: content extraction plus subresultant
//! pseudo-remainder sequences, recursing over the variable set.

use super::poly::{MultiPoly, Mono, NVARS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

/// Univariate view: coefficients (in the remaining variables) by power of
/// the main variable.
fn to_univar(p: &MultiPoly, var: usize) -> Vec<MultiPoly> {
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![MultiPoly::zero(); deg + 1];
    for (m, c) in &p.terms {
        let e = m.0[var] as usize;
        let mut rest = m.0;
        rest[var] = 0;
        coeffs[e] = coeffs[e].add_ref(&MultiPoly::monomial(c.clone(), rest));
    }
    coeffs
}

fn from_univar(coeffs: &[MultiPoly], var: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        let mut mono = [0u16; NVARS];
        mono[var] = e as u16;
        out = out.add_ref(&c.mul_mono(&Mono(mono), &BigInt::one()));
    }
    out
}

fn univar_deg(coeffs: &[MultiPoly]) -> usize {
    coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn univar_trim(coeffs: &mut Vec<MultiPoly>) {
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials:
/// lc(b)^(da-db+1) * a  mod  b.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let da = univar_deg(a);
    let db = univar_deg(b);
    assert!(db <= da);
    let lb = b[db].clone();
    let mut r: Vec<MultiPoly> = a.to_vec();
    for k in (db..=da).rev() {
        let lead = r.get(k).cloned().unwrap_or_else(MultiPoly::zero);
        for c in r.iter_mut() {
            *c = c.mul_ref(&lb);
        }
        if !lead.is_zero() {
            // subtract lead * x^(k-db) * b
            for j in 0..=db {
                let t = lead.mul_ref(&b[j]);
                r[k - db + j] = r[k - db + j].sub_ref(&t);
            }
        }
        univar_trim(&mut r);
    }
    univar_trim(&mut r);
    r
}

/// Content of a univariate-view polynomial: GCD of its coefficients.
fn univar_content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Normalize sign so the graded-lex leading coefficient is positive.
pub fn sign_normalize(p: &MultiPoly) -> MultiPoly {
    if p.leading_sign() < 0 {
        p.neg_ref()
    } else {
        p.clone()
    }
}

/// GCD of two multivariate polynomials, sign-normalized so that the leading
/// coefficient (graded-lex) is positive. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return sign_normalize(b);
    }
    if b.is_zero() {
        return sign_normalize(a);
    }
    // Integer content out front.
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);
    let ap = a.div_int(&ca);
    let bp = b.div_int(&cb);

    // Main variable: the highest-index variable used by either argument.
    let var = (0..NVARS).rev().find(|&i| ap.uses_var(i) || bp.uses_var(i));
    let var = match var {
        None => {
            // Both are +-1 after content removal.
            return MultiPoly::constant(cg);
        }
        Some(v) => v,
    };

    let ua = to_univar(&ap, var);
    let ub = to_univar(&bp, var);
    let cont_a = univar_content(&ua);
    let cont_b = univar_content(&ub);
    let cont_g = poly_gcd(&cont_a, &cont_b);
    let prim_a: Vec<MultiPoly> = ua.iter().map(|c| c.exact_div(&cont_a)).collect();
    let prim_b: Vec<MultiPoly> = ub.iter().map(|c| c.exact_div(&cont_b)).collect();

    let prim_gcd = subresultant_gcd(prim_a, prim_b);
    let g = cont_g.mul_ref(&from_univar(&prim_gcd, var)).scale(&cg);
    sign_normalize(&g)
}

/// Subresultant PRS on primitive univariate-view inputs; returns the
/// primitive GCD (again in univariate view over the same main variable).
fn subresultant_gcd(a: Vec<MultiPoly>, b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let (mut f, mut g) = if univar_deg(&a) >= univar_deg(&b) {
        (a, b)
    } else {
        (b, a)
    };
    if univar_deg(&g) == 0 && g.len() == 1 && g[0].is_zero() {
        return f;
    }
    let mut h = MultiPoly::one();
    let mut s = MultiPoly::one();
    loop {
        let df = univar_deg(&f);
        let dg = univar_deg(&g);
        let delta = df - dg;
        let r = pseudo_rem(&f, &g);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        if univar_deg(&r) == 0 {
            // Non-zero constant (in the main variable) remainder: coprime.
            return vec![MultiPoly::one()];
        }
        let lg = g[dg].clone();
        // divisor = s * h^delta
        let mut divisor = s.clone();
        for _ in 0..delta {
            divisor = divisor.mul_ref(&h);
        }
        f = g;
        g = r.iter().map(|c| c.exact_div(&divisor)).collect();
        univar_trim(&mut g);
        s = lg.clone();
        // h = s^delta * h^(1-delta)
        h = if delta == 0 {
            h
        } else {
            let mut num = s.pow(delta as u32);
            for _ in 0..delta.saturating_sub(1) {
                num = num.exact_div(&h);
            }
            num
        };
    }
    // g is the last nonzero remainder; return its primitive part.
    let cont = univar_content(&g);
    g.iter().map(|c| c.exact_div(&cont)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn u() -> MultiPoly {
        MultiPoly::var(1)
    }
    fn v() -> MultiPoly {
        MultiPoly::var(2)
    }

    #[test]
    fn gcd_simple_univariate() {
        // gcd((u+1)^2 (u-3), (u+1)(u+5)) = u+1
        let a = (&u() + &MultiPoly::int(1))
            .pow(2)
            .mul_ref(&(&u() - &MultiPoly::int(3)));
        let b = (&u() + &MultiPoly::int(1)).mul_ref(&(&u() + &MultiPoly::int(5)));
        assert_eq!(poly_gcd(&a, &b), &u() + &MultiPoly::int(1));
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((m+u)(2m-v), (m+u)(m+3)) = m+u
        let f = &m() + &u();
        let a = f.mul_ref(&(&(&MultiPoly::int(2) * &m()) - &v()));
        let b = f.mul_ref(&(&m() + &MultiPoly::int(3)));
        assert_eq!(poly_gcd(&a, &b), f);
    }

    #[test]
    fn gcd_with_content() {
        // gcd(6(m+2), 4(m+2)^2) = 2(m+2)
        let f = &m() + &MultiPoly::int(2);
        let a = f.scale(&6.into());
        let b = f.pow(2).scale(&4.into());
        assert_eq!(poly_gcd(&a, &b), f.scale(&2.into()));
    }

    #[test]
    fn gcd_coprime() {
        let a = &m() + &MultiPoly::int(2);
        let b = &u() - &MultiPoly::int(4);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_sign_normalized() {
        let a = &MultiPoly::int(0) - &(&m() + &MultiPoly::int(2));
        let g = poly_gcd(&a, &a.clone());
        assert_eq!(g, &m() + &MultiPoly::int(2));
    }
}
