//! Generic character tables of `SL_2(q)`, `PSL_2(q)` and `PGL_2(q)`.
//!
//! Parameters: `ν` generates `F_q^*`, `ρ = E(q−1)`, `σ = E(q+1)`,
//! `ε = (−1)^{(q−1)/2}` for odd `q`.
//!
//! Class names:
//! - `u1 = [[1,1],[0,1]]`, `u2 = [[1,ν],[0,1]]`, `z = −1`, `zu1`, `zu2`;
//! - `a^l` is the split torus element `diag(ν^l, ν^{−l})` (in `PGL_2`: `diag(ν^l, 1)`);
//! - `b^m` is the `m`-th power of a generator of the nonsplit torus of order `q+1`
//!   (in `PGL_2`, of `F_{q²}^*/F_q^*`).
//!
//! Character names: `1`, `St`, `chi_i` (principal series, `ρ^{il}+ρ^{−il}` on `a^l`),
//! `theta_j` (discrete series, `−(σ^{jm}+σ^{−jm})` on `b^m`), `xi1`/`xi2` and
//! `eta1`/`eta2` (halves of the reducible series), `sgn`, `St.sgn`.

use num_bigint::BigInt;

use super::BuildError;
use crate::chartable::{
    gcd, prime_power, Character, CharacterTable, ConjugacyClass, Epsilon, LieParams,
};
use crate::exactnum::{Cyclotomic, Rational};

pub const MIN_Q: u64 = 4;
pub const MAX_Q: u64 = 49;

fn check_q(q: u64) -> Result<u64, BuildError> {
    if !(MIN_Q..=MAX_Q).contains(&q) {
        return Err(BuildError::OutOfRange {
            what: "q",
            value: q,
            min: MIN_Q,
            max: MAX_Q,
        });
    }
    prime_power(q)
        .map(|(p, _)| p)
        .ok_or(BuildError::NotPrimePower(q))
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

fn sgn(k: u64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn halves(a: i64, root: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    let h = Rational::new(BigInt::from(1), BigInt::from(2));
    (
        (&int(a) + root).scale(&h),
        (&int(a) - root).scale(&h),
    )
}

fn lie(q: u64) -> Option<LieParams> {
    LieParams::new(2, q, Epsilon::Plus, 1)
}

fn cls(name: String, size: u64, order: u64) -> ConjugacyClass {
    ConjugacyClass::new(name, size, order)
}

/// Shared table for even `q`, where the three groups coincide.
fn even_table(name: String, q: u64) -> CharacterTable {
    let qi = q as i64;
    let mut classes = vec![cls("1".into(), 1, 1), cls("u".into(), q * q - 1, 2)];
    let ls: Vec<u64> = (1..=(q - 2) / 2).collect();
    let ms: Vec<u64> = (1..=q / 2).collect();
    for &l in &ls {
        classes.push(cls(format!("a^{l}"), q * (q + 1), (q - 1) / gcd(l, q - 1)));
    }
    for &m in &ms {
        classes.push(cls(format!("b^{m}"), q * (q - 1), (q + 1) / gcd(m, q + 1)));
    }
    let (nq1, nq2) = ((q - 1) as u32, (q + 1) as u32);
    let row = |id: i64, u: i64, a: &dyn Fn(u64) -> Cyclotomic, b: &dyn Fn(u64) -> Cyclotomic| {
        let mut v = vec![int(id), int(u)];
        v.extend(ls.iter().map(|&l| a(l)));
        v.extend(ms.iter().map(|&m| b(m)));
        v
    };
    let mut characters = vec![
        Character::new("1", row(1, 1, &|_| int(1), &|_| int(1))),
        Character::new("St", row(qi, 0, &|_| int(1), &|_| int(-1))),
    ];
    for i in 1..=(q - 2) / 2 {
        let v = row(qi + 1, 1, &|l| Cyclotomic::root_cos(nq1, (i * l) as i64), &|_| int(0));
        characters.push(Character::new(format!("chi_{i}"), v));
    }
    for j in 1..=q / 2 {
        let v = row(qi - 1, -1, &|_| int(0), &|m| -Cyclotomic::root_cos(nq2, (j * m) as i64));
        characters.push(Character::new(format!("theta_{j}"), v));
    }
    CharacterTable {
        name,
        order: q * (q * q - 1),
        characteristic: Some(2),
        lie: lie(q),
        classes,
        characters,
    }
}

/// `PSL_2(q)` image of the `SL_2(q)` class `a^l`.
fn psl_a(q: u64, l: u64) -> u64 {
    l.min((q - 1) / 2 - l)
}

fn psl_b(q: u64, m: u64) -> u64 {
    m.min((q + 1) / 2 - m)
}

pub fn build_sl2_table(q: u64) -> Result<CharacterTable, BuildError> {
    let p = check_q(q)?;
    if p == 2 {
        return Ok(even_table(format!("SL2({q})"), q));
    }
    let qi = q as i64;
    let eps = sgn((q - 1) / 2);
    let half_unip = (q * q - 1) / 2;
    let ls: Vec<u64> = (1..=(q - 3) / 2).collect();
    let ms: Vec<u64> = (1..=(q - 1) / 2).collect();

    let mut classes = vec![cls("1".into(), 1, 1), cls("z".into(), 1, 2)];
    for k in 1..=2 {
        let mut c = cls(format!("u{k}"), half_unip, p);
        c.image = Some(format!("u{k}"));
        classes.push(c);
    }
    for k in 1..=2 {
        let mut c = cls(format!("zu{k}"), half_unip, 2 * p);
        c.image = Some(format!("u{k}"));
        classes.push(c);
    }
    classes[0].image = Some("1".into());
    classes[1].image = Some("1".into());
    for &l in &ls {
        let mut c = cls(format!("a^{l}"), q * (q + 1), (q - 1) / gcd(l, q - 1));
        c.image = Some(format!("a^{}", psl_a(q, l)));
        classes.push(c);
    }
    for &m in &ms {
        let mut c = cls(format!("b^{m}"), q * (q - 1), (q + 1) / gcd(m, q + 1));
        c.image = Some(format!("b^{}", psl_b(q, m)));
        classes.push(c);
    }

    let (nq1, nq2) = ((q - 1) as u32, (q + 1) as u32);
    // central sign, values on u1, u2, then torus rules
    let row = |deg: i64,
               zsign: i64,
               u: [Cyclotomic; 2],
               a: &dyn Fn(u64) -> Cyclotomic,
               b: &dyn Fn(u64) -> Cyclotomic| {
        let mut v = vec![int(deg), int(zsign * deg)];
        v.extend(u.iter().cloned());
        v.extend(u.iter().map(|x| x * &int(zsign)));
        v.extend(ls.iter().map(|&l| a(l)));
        v.extend(ms.iter().map(|&m| b(m)));
        v
    };

    let mut characters = vec![
        Character::new("1", row(1, 1, [int(1), int(1)], &|_| int(1), &|_| int(1))),
        Character::new(
            "St",
            row(qi, 1, [int(0), int(0)], &|_| int(1), &|_| int(-1)),
        ),
    ];
    for i in 1..=(q - 3) / 2 {
        let v = row(
            qi + 1,
            sgn(i),
            [int(1), int(1)],
            &|l| Cyclotomic::root_cos(nq1, (i * l) as i64),
            &|_| int(0),
        );
        characters.push(Character::new(format!("chi_{i}"), v));
    }
    for j in 1..=(q - 1) / 2 {
        let v = row(
            qi - 1,
            sgn(j),
            [int(-1), int(-1)],
            &|_| int(0),
            &|m| -Cyclotomic::root_cos(nq2, (j * m) as i64),
        );
        characters.push(Character::new(format!("theta_{j}"), v));
    }
    let root = Cyclotomic::sqrt_int(eps * qi);
    let (xp, xm) = halves(1, &root);
    let (ep, em) = halves(-1, &root);
    let xi_deg = (qi + 1) / 2;
    let eta_deg = (qi - 1) / 2;
    let pairs = [("1", [xp.clone(), xm.clone()]), ("2", [xm, xp])];
    for (k, u) in pairs {
        let v = row(xi_deg, eps, u, &|l| int(sgn(l)), &|_| int(0));
        characters.push(Character::new(format!("xi{k}"), v));
    }
    let pairs = [("1", [ep.clone(), em.clone()]), ("2", [em, ep])];
    for (k, u) in pairs {
        let v = row(eta_deg, -eps, u, &|_| int(0), &|m| int(-sgn(m)));
        characters.push(Character::new(format!("eta{k}"), v));
    }

    Ok(CharacterTable {
        name: format!("SL2({q})"),
        order: q * (q * q - 1),
        characteristic: Some(p),
        lie: lie(q),
        classes,
        characters,
    })
}

pub fn build_psl2_table(q: u64) -> Result<CharacterTable, BuildError> {
    let p = check_q(q)?;
    if p == 2 {
        return Ok(even_table(format!("PSL2({q})"), q));
    }
    let sl = build_sl2_table(q)?;
    let z = sl.class_index("z").expect("central class");

    // Representative SL_2 class for each PSL_2 class, and the PSL_2 class data.
    let mut reps = Vec::new();
    let mut classes = Vec::new();
    for (k, c) in sl.classes.iter().enumerate() {
        let image = c.image.as_deref().expect("annotated");
        if image != c.name || k == z {
            continue;
        }
        let fused = sl
            .classes
            .iter()
            .filter(|d| d.image.as_deref() == Some(image))
            .count() as u64;
        // a class meeting its own z-translate keeps its size; otherwise two classes merge
        let size = c.size * fused / 2;
        let order = if let Some(l) = c.name.strip_prefix("a^") {
            let l: u64 = l.parse().expect("torus index");
            let h = (q - 1) / 2;
            h / gcd(l, h)
        } else if let Some(m) = c.name.strip_prefix("b^") {
            let m: u64 = m.parse().expect("torus index");
            let h = (q + 1) / 2;
            h / gcd(m, h)
        } else {
            c.rep_order
        };
        reps.push(k);
        classes.push(cls(c.name.clone(), size, order));
    }

    let characters = sl
        .characters
        .iter()
        .filter(|ch| ch.values[z] == ch.values[0])
        .map(|ch| Character::new(ch.name.clone(), reps.iter().map(|&k| ch.values[k].clone()).collect()))
        .collect();

    Ok(CharacterTable {
        name: format!("PSL2({q})"),
        order: q * (q * q - 1) / 2,
        characteristic: Some(p),
        lie: lie(q),
        classes,
        characters,
    })
}

pub fn build_pgl2_table(q: u64) -> Result<CharacterTable, BuildError> {
    let p = check_q(q)?;
    if p == 2 {
        return Ok(even_table(format!("PGL2({q})"), q));
    }
    let qi = q as i64;
    let ls: Vec<u64> = (1..=(q - 1) / 2).collect();
    let ms: Vec<u64> = (1..=(q + 1) / 2).collect();
    let mut classes = vec![cls("1".into(), 1, 1), cls("u".into(), q * q - 1, p)];
    for &l in &ls {
        let size = if l == (q - 1) / 2 { q * (q + 1) / 2 } else { q * (q + 1) };
        classes.push(cls(format!("a^{l}"), size, (q - 1) / gcd(l, q - 1)));
    }
    for &m in &ms {
        let size = if m == (q + 1) / 2 { q * (q - 1) / 2 } else { q * (q - 1) };
        classes.push(cls(format!("b^{m}"), size, (q + 1) / gcd(m, q + 1)));
    }
    let (nq1, nq2) = ((q - 1) as u32, (q + 1) as u32);
    let row = |id: i64, u: i64, a: &dyn Fn(u64) -> Cyclotomic, b: &dyn Fn(u64) -> Cyclotomic| {
        let mut v = vec![int(id), int(u)];
        v.extend(ls.iter().map(|&l| a(l)));
        v.extend(ms.iter().map(|&m| b(m)));
        v
    };
    let mut characters = vec![
        Character::new("1", row(1, 1, &|_| int(1), &|_| int(1))),
        Character::new("sgn", row(1, 1, &|l| int(sgn(l)), &|m| int(sgn(m)))),
        Character::new("St", row(qi, 0, &|_| int(1), &|_| int(-1))),
        Character::new(
            "St.sgn",
            row(qi, 0, &|l| int(sgn(l)), &|m| int(-sgn(m))),
        ),
    ];
    for i in 1..=(q - 3) / 2 {
        let v = row(qi + 1, 1, &|l| Cyclotomic::root_cos(nq1, (i * l) as i64), &|_| int(0));
        characters.push(Character::new(format!("chi_{i}"), v));
    }
    for j in 1..=(q - 1) / 2 {
        let v = row(qi - 1, -1, &|_| int(0), &|m| -Cyclotomic::root_cos(nq2, (j * m) as i64));
        characters.push(Character::new(format!("theta_{j}"), v));
    }
    Ok(CharacterTable {
        name: format!("PGL2({q})"),
        order: q * (q * q - 1),
        characteristic: Some(p),
        lie: lie(q),
        classes,
        characters,
    })
}
