//! Named group families and the `<family>:<param>` descriptor grammar.

use std::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{Group, Limits, PermGenSet};
use crate::io;

/// The checked-in SL(2,5) generators, acting on the 24 nonzero vectors
/// of `F_5^2`. Regenerate with `scripts/derive_sl2_5.py`.
pub const SL2_5_CORPUS: &str = include_str!("../corpus/sl2_5.txt");

/// A parsed group descriptor, e.g. `dihedral:4` or
/// `product(symmetric:3,cyclic:2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CatalogSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Dicyclic group of order `4n`; `n = 2` is the quaternion group.
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, u32),
    /// Upper unitriangular 3x3 matrices over `F_p`.
    Heisenberg(usize),
    /// `<a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>`.
    ExtraspecialExpP2(usize),
    Corpus(String),
    File(String),
    Product(Box<CatalogSpec>, Box<CatalogSpec>),
}

impl CatalogSpec {
    pub fn parse(text: &str) -> Result<CatalogSpec> {
        let text = text.trim();
        let syntax = |reason: &str| Error::SpecSyntax {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        if let Some(inner) = text.strip_prefix("product(") {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| syntax("missing closing parenthesis"))?;
            let split = top_level_comma(inner).ok_or_else(|| syntax("product needs two factors"))?;
            let left = CatalogSpec::parse(&inner[..split])?;
            let right = CatalogSpec::parse(&inner[split + 1..])?;
            return Ok(CatalogSpec::Product(Box::new(left), Box::new(right)));
        }
        let (family, rest) = text.split_once(':').ok_or_else(|| syntax("expected <family>:<param>"))?;
        match family {
            "corpus" => return Ok(CatalogSpec::Corpus(rest.to_string())),
            "file" => return Ok(CatalogSpec::File(rest.to_string())),
            _ => {}
        }
        let params = rest
            .split(':')
            .map(|p| {
                p.parse::<usize>().map_err(|_| Error::BadParameter {
                    family: family.to_string(),
                    reason: format!("`{p}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParameter {
                    family: family.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let spec = match family {
            "cyclic" => {
                arity(1)?;
                CatalogSpec::Cyclic(params[0])
            }
            "dihedral" => {
                arity(1)?;
                CatalogSpec::Dihedral(params[0])
            }
            "dicyclic" => {
                arity(1)?;
                CatalogSpec::Dicyclic(params[0])
            }
            "symmetric" => {
                arity(1)?;
                CatalogSpec::Symmetric(params[0])
            }
            "alternating" => {
                arity(1)?;
                CatalogSpec::Alternating(params[0])
            }
            "elementary_abelian" => {
                arity(2)?;
                CatalogSpec::ElementaryAbelian(params[0], params[1] as u32)
            }
            "heisenberg" => {
                arity(1)?;
                CatalogSpec::Heisenberg(params[0])
            }
            "extraspecial_exp_p2" => {
                arity(1)?;
                CatalogSpec::ExtraspecialExpP2(params[0])
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(spec)
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            CatalogSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            CatalogSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            CatalogSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            CatalogSpec::Alternating(n) => write!(f, "alternating:{n}"),
            CatalogSpec::ElementaryAbelian(p, k) => write!(f, "elementary_abelian:{p}:{k}"),
            CatalogSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            CatalogSpec::ExtraspecialExpP2(p) => write!(f, "extraspecial_exp_p2:{p}"),
            CatalogSpec::Corpus(name) => write!(f, "corpus:{name}"),
            CatalogSpec::File(path) => write!(f, "file:{path}"),
            CatalogSpec::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

fn bad(family: &str, reason: impl Into<String>) -> Error {
    Error::BadParameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn require_prime(family: &str, p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(bad(family, format!("{p} is not prime")))
    }
}

fn checked_order(limits: Limits, order: Option<usize>) -> Result<usize> {
    match order {
        Some(n) if n <= limits.max_order => Ok(n),
        _ => Err(Error::OrderLimitExceeded {
            limit: limits.max_order,
        }),
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Builds the group a descriptor names, labeled with the descriptor text.
pub fn named(spec: &CatalogSpec, limits: Limits) -> Result<Group> {
    let group = match spec {
        CatalogSpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(bad("cyclic", "order must be positive"));
            }
            checked_order(limits, Some(n))?;
            Group::from_fn(n, |a, b| (a + b) % n)?
        }
        CatalogSpec::Dihedral(n) => {
            // (i, e) ~ r^i s^e stored at 2i + e.
            let n = *n;
            if n == 0 {
                return Err(bad("dihedral", "parameter must be positive"));
            }
            checked_order(limits, n.checked_mul(2))?;
            Group::from_fn(2 * n, |x, y| {
                let (i, e) = (x / 2, x % 2);
                let (j, f) = (y / 2, y % 2);
                let j = if e == 1 { (n - j) % n } else { j };
                2 * ((i + j) % n) + (e ^ f)
            })?
        }
        CatalogSpec::Dicyclic(n) => {
            // a^i x^e at 2i + e, with x^2 = a^n and x^-1 a x = a^-1.
            let n = *n;
            if n == 0 {
                return Err(bad("dicyclic", "parameter must be positive"));
            }
            let m = 2 * n;
            checked_order(limits, n.checked_mul(4))?;
            Group::from_fn(2 * m, |x, y| {
                let (i, e) = (x / 2, x % 2);
                let (j, f) = (y / 2, y % 2);
                let j = if e == 1 { (m - j) % m } else { j };
                let extra = if e == 1 && f == 1 { n } else { 0 };
                2 * ((i + j + extra) % m) + (e ^ f)
            })?
        }
        CatalogSpec::Symmetric(n) => {
            let n = *n;
            if n == 0 {
                return Err(bad("symmetric", "degree must be positive"));
            }
            checked_order(limits, factorial(n))?;
            let mut gens = Vec::new();
            if n >= 2 {
                let mut transposition: Vec<usize> = (0..n).collect();
                transposition.swap(0, 1);
                gens.push(transposition);
                gens.push((0..n).map(|i| (i + 1) % n).collect());
            }
            Group::from_permutation_generators(&PermGenSet::new(n, gens), limits)?
        }
        CatalogSpec::Alternating(n) => {
            let n = *n;
            if n == 0 {
                return Err(bad("alternating", "degree must be positive"));
            }
            checked_order(limits, factorial(n).map(|f| f.div_ceil(2)))?;
            // 3-cycles (0 1 k) generate A_n.
            let gens = (2..n)
                .map(|k| {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm[0] = 1;
                    perm[1] = k;
                    perm[k] = 0;
                    perm
                })
                .collect();
            Group::from_permutation_generators(&PermGenSet::new(n, gens), limits)?
        }
        CatalogSpec::ElementaryAbelian(p, k) => {
            let (p, k) = (*p, *k);
            require_prime("elementary_abelian", p)?;
            let order = checked_order(limits, p.checked_pow(k))?;
            Group::from_fn(order, |mut x, mut y| {
                let mut out = 0;
                let mut place = 1;
                for _ in 0..k {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                out
            })?
        }
        CatalogSpec::Heisenberg(p) => {
            // [[1,a,c],[0,1,b],[0,0,1]] stored at a + p*b + p^2*c.
            let p = *p;
            require_prime("heisenberg", p)?;
            checked_order(limits, p.checked_pow(3))?;
            let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
            Group::from_fn(p * p * p, |x, y| {
                let (a, b, c) = split(x);
                let (a2, b2, c2) = split(y);
                (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
            })?
        }
        CatalogSpec::ExtraspecialExpP2(p) => {
            // a^i b^j stored at i + p^2 * j; b^j a^i = a^(i (1+p)^j) b^j.
            let p = *p;
            require_prime("extraspecial_exp_p2", p)?;
            checked_order(limits, p.checked_pow(3))?;
            let q = p * p;
            let twist: Vec<usize> = (0..p)
                .scan(1usize, |acc, _| {
                    let v = *acc;
                    *acc = *acc * (1 + p) % q;
                    Some(v)
                })
                .collect();
            Group::from_fn(q * p, |x, y| {
                let (i, j) = (x % q, x / q);
                let (i2, j2) = (y % q, y / q);
                (i + i2 * twist[j]) % q + q * ((j + j2) % p)
            })?
        }
        CatalogSpec::Corpus(name) => match name.as_str() {
            "sl2_5" => io::parse_group(SL2_5_CORPUS, limits)?,
            other => return Err(bad("corpus", format!("no corpus file named `{other}`"))),
        },
        CatalogSpec::File(path) => io::load_group(std::path::Path::new(path), limits)?,
        CatalogSpec::Product(a, b) => {
            let left = named(a, limits)?;
            let right = named(b, limits)?;
            left.direct_product(&right, limits)?
        }
    };
    Ok(group.with_label(spec.to_string()))
}
