//! Constructors for the standard group families and the short group names
//! accepted on the command line.
//!
//! Element numbering is fixed per family:
//!
//! | family | element `i` |
//! |---|---|
//! | `c(n)` | `a^i` (addition mod `n`) |
//! | `a(d1,..,dk)` | mixed-radix coordinates, first factor most significant |
//! | `d(n)` | `r^i` for `i < n`, `r^(i-n) b` otherwise |
//! | `gd(d1,..)` | `a` for `i < \|A\|`, `a b` otherwise, `a` numbered as in `a(..)` |
//! | `dic(4n)`, `q(2^m)` | `x^(i mod 2n) y^(i div 2n)` |
//! | `dp(X,Y)` | `(x, y)` at `x * \|Y\| + y` |
//! | `sd(A,m,φ)` | `a b^k` at `k * \|A\| + a` |
//!
//! The dihedral relation is `b⁻¹ r b = r⁻¹`; dicyclic groups satisfy
//! `x^(2n) = 1`, `y² = x^n`, `y⁻¹ x y = x⁻¹`; semidirect products use
//! `b a b⁻¹ = φ(a)`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::mask::SubsetMask;
use crate::subgroup::Subgroup;

/// Largest order any builder will materialize.
pub const MAX_BUILD_ORDER: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Invariant factors `d1 | d2 | ... | dk`, each at least 2.
    Abelian(Vec<usize>),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// `A ⋊ <b>` for the abelian group with these invariant factors.
    GeneralizedDihedral(Vec<usize>),
    /// Generalized quaternion group of the given order (a power of 2, ≥ 8).
    GeneralizedQuaternion(usize),
    /// Dicyclic group of the given order `4n`.
    Dicyclic(usize),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// `A ⋊ Z_m` where the generator of `Z_m` acts on `A` by the integer
    /// matrix `action`: the image of the `i`th generator of `A` has
    /// coordinates `action[i]`.
    Semidirect {
        normal: Vec<usize>,
        acting: usize,
        action: Vec<Vec<i64>>,
    },
    FromTable(PathBuf),
}

/// A constructed group with its named elements.
#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub spec: GroupSpec,
    pub group: Group,
    pub labels: BTreeMap<String, ElementId>,
}

impl BuiltGroup {
    /// Resolves an element token: a numeric id, a label, or `label^k`.
    pub fn element(&self, token: &str) -> Result<ElementId> {
        let token = token.trim();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<usize>()
                    .map_err(|_| Error::Spec(format!("bad exponent in {token:?}")))?,
            ),
            None => (token, 1),
        };
        let x = match base.parse::<usize>() {
            Ok(id) => {
                self.group.check_element(id)?;
                id
            }
            Err(_) => *self
                .labels
                .get(base)
                .ok_or_else(|| Error::Spec(format!("unknown element {base:?}")))?,
        };
        Ok(self.group.pow(x, exp))
    }

    /// The subgroup generated by a comma- or space-separated token list.
    pub fn subgroup(&self, gens: &str) -> Result<Subgroup> {
        let ids = gens
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| self.element(t))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::generated(&self.group, &ids)
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<BuiltGroup> {
        let (group, labels) = self.construct()?;
        Ok(BuiltGroup {
            spec: self.clone(),
            group,
            labels,
        })
    }

    /// Order of the group this name describes, without building it.
    pub fn order(&self) -> Option<usize> {
        Some(match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Abelian(f) => f.iter().product(),
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::GeneralizedDihedral(f) => 2 * f.iter().product::<usize>(),
            GroupSpec::GeneralizedQuaternion(n) | GroupSpec::Dicyclic(n) => *n,
            GroupSpec::DirectProduct(a, b) => a.order()? * b.order()?,
            GroupSpec::Semidirect { normal, acting, .. } => {
                normal.iter().product::<usize>() * acting
            }
            GroupSpec::FromTable(_) => return None,
        })
    }

    fn construct(&self) -> Result<(Group, BTreeMap<String, ElementId>)> {
        if let Some(n) = self.order() {
            if n == 0 || n > MAX_BUILD_ORDER {
                return Err(Error::Spec(format!(
                    "order {n} outside 1..={MAX_BUILD_ORDER}"
                )));
            }
        }
        let mut labels = BTreeMap::new();
        let group = match self {
            GroupSpec::Cyclic(n) => {
                let n = *n;
                if n > 1 {
                    labels.insert("a".into(), 1);
                }
                table_group(n, |a, b| (a + b) % n)?
            }
            GroupSpec::Abelian(f) => {
                let ab = Abelian::new(f)?;
                ab.label_generators(&mut labels, 0);
                table_group(ab.order(), |a, b| ab.add(a, b))?
            }
            GroupSpec::Dihedral(n) => {
                let n = *n;
                if n == 0 {
                    return Err(Error::Spec("dihedral needs n ≥ 1".into()));
                }
                let g = table_group(2 * n, |a, b| {
                    let (i, s) = (a % n, a / n);
                    let (j, t) = (b % n, b / n);
                    let k = if s == 0 { i + j } else { i + n - j } % n;
                    ((s + t) % 2) * n + k
                })?;
                labels.insert("r".into(), 1 % n);
                labels.insert("b".into(), n);
                let a = Subgroup::from_mask_unchecked(SubsetMask::from_elements(2 * n, 0..n));
                g.with_dihedral_structure(a, n)?
            }
            GroupSpec::GeneralizedDihedral(f) => {
                let ab = Abelian::new(f)?;
                let m = ab.order();
                let g = table_group(2 * m, |x, y| {
                    let (a, s) = (x % m, x / m);
                    let (c, t) = (y % m, y / m);
                    let c = if s == 0 { c } else { ab.neg(c) };
                    ((s + t) % 2) * m + ab.add(a, c)
                })?;
                ab.label_generators(&mut labels, 0);
                labels.insert("b".into(), m);
                let a = Subgroup::from_mask_unchecked(SubsetMask::from_elements(2 * m, 0..m));
                g.with_dihedral_structure(a, m)?
            }
            GroupSpec::GeneralizedQuaternion(n) => {
                if *n < 8 || !n.is_power_of_two() {
                    return Err(Error::Spec(format!(
                        "generalized quaternion order must be a power of 2 ≥ 8, got {n}"
                    )));
                }
                dicyclic(*n, &mut labels)?
            }
            GroupSpec::Dicyclic(n) => {
                if *n < 8 || n % 4 != 0 {
                    return Err(Error::Spec(format!(
                        "dicyclic order must be a multiple of 4 and ≥ 8, got {n}"
                    )));
                }
                dicyclic(*n, &mut labels)?
            }
            GroupSpec::DirectProduct(a, b) => {
                let (ga, la) = a.construct()?;
                let (gb, lb) = b.construct()?;
                let nb = gb.order();
                for (k, v) in la {
                    labels.insert(format!("l.{k}"), v * nb);
                }
                for (k, v) in lb {
                    labels.insert(format!("r.{k}"), v);
                }
                table_group(ga.order() * nb, |x, y| {
                    ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb)
                })?
            }
            GroupSpec::Semidirect {
                normal,
                acting,
                action,
            } => {
                let ab = Abelian::new(normal)?;
                let m = *acting;
                if m == 0 {
                    return Err(Error::Spec("acting cyclic order must be ≥ 1".into()));
                }
                let powers = ab.automorphism_powers(action, m)?;
                let na = ab.order();
                ab.label_generators(&mut labels, 0);
                if m > 1 {
                    labels.insert("b".into(), na);
                }
                table_group(na * m, |x, y| {
                    let (a, k) = (x % na, x / na);
                    let (c, l) = (y % na, y / na);
                    ((k + l) % m) * na + ab.add(a, powers[k][c])
                })?
            }
            GroupSpec::FromTable(path) => Group::import_table(path)?,
        };
        Ok((group, labels))
    }
}

fn table_group(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Group> {
    let mut t = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            t.push(f(a, b));
        }
    }
    Ok(Group::from_table(n, t)?)
}

fn dicyclic(order: usize, labels: &mut BTreeMap<String, ElementId>) -> Result<Group> {
    let n2 = order / 2;
    let n = order / 4;
    labels.insert("x".into(), 1);
    labels.insert("y".into(), n2);
    table_group(order, |a, b| {
        let (i, s) = (a % n2, a / n2);
        let (j, t) = (b % n2, b / n2);
        let k = if s == 0 { i + j } else { i + n2 - j };
        if s + t == 2 {
            (k + n) % n2
        } else {
            (s + t) * n2 + k % n2
        }
    })
}

/// Finite abelian group in invariant-factor form with mixed-radix ids.
struct Abelian {
    factors: Vec<usize>,
    /// `strides[i]` is the id weight of coordinate `i`.
    strides: Vec<usize>,
}

impl Abelian {
    fn new(factors: &[usize]) -> Result<Abelian> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::Spec("invariant factors must be ≥ 2".into()));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Spec(format!(
                "invariant factors {factors:?} must divide successively"
            )));
        }
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(Abelian {
            factors: factors.to_vec(),
            strides,
        })
    }

    fn order(&self) -> usize {
        self.factors.iter().product()
    }

    fn coords(&self, x: usize) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| x / s % d)
            .collect()
    }

    fn id(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (cx, cy) = (self.coords(x), self.coords(y));
        let c: Vec<usize> = (0..self.factors.len())
            .map(|i| (cx[i] + cy[i]) % self.factors[i])
            .collect();
        self.id(&c)
    }

    fn neg(&self, x: usize) -> usize {
        let c: Vec<usize> = self
            .coords(x)
            .iter()
            .zip(&self.factors)
            .map(|(&c, &d)| (d - c) % d)
            .collect();
        self.id(&c)
    }

    fn label_generators(&self, labels: &mut BTreeMap<String, ElementId>, offset: usize) {
        for (i, s) in self.strides.iter().enumerate() {
            labels.insert(format!("e{}", i + 1), offset + s);
        }
    }

    /// Tables of `φ^k` for `k < m`, after checking that the matrix defines
    /// an automorphism whose order divides `m`.
    fn automorphism_powers(&self, action: &[Vec<i64>], m: usize) -> Result<Vec<Vec<usize>>> {
        let k = self.factors.len();
        if action.len() != k || action.iter().any(|r| r.len() != k) {
            return Err(Error::Spec(format!("action must be a {k}x{k} matrix")));
        }
        for i in 0..k {
            for j in 0..k {
                let d_i = self.factors[i] as i64;
                let d_j = self.factors[j] as i64;
                if (d_i * action[i][j]).rem_euclid(d_j) != 0 {
                    return Err(Error::Spec(format!(
                        "image of generator {} has order not dividing {d_i}",
                        i + 1
                    )));
                }
            }
        }
        let n = self.order();
        let phi: Vec<usize> = (0..n)
            .map(|x| {
                let c = self.coords(x);
                let img: Vec<usize> = (0..k)
                    .map(|j| {
                        let d = self.factors[j] as i64;
                        (0..k)
                            .map(|i| c[i] as i64 * action[i][j])
                            .sum::<i64>()
                            .rem_euclid(d) as usize
                    })
                    .collect();
                self.id(&img)
            })
            .collect();
        let mut hit = vec![false; n];
        for &y in &phi {
            if std::mem::replace(&mut hit[y], true) {
                return Err(Error::Spec("action is not bijective".into()));
            }
        }
        let mut powers = vec![(0..n).collect::<Vec<_>>()];
        for _ in 1..=m {
            let last = powers.last().unwrap();
            powers.push(last.iter().map(|&x| phi[x]).collect());
        }
        if powers[m].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::Spec(format!("action order does not divide {m}")));
        }
        powers.truncate(m);
        Ok(powers)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            GroupSpec::Cyclic(n) => write!(f, "c{n}"),
            GroupSpec::Abelian(v) => write!(f, "a({})", list(v)),
            GroupSpec::Dihedral(n) => write!(f, "d{n}"),
            GroupSpec::GeneralizedDihedral(v) => write!(f, "gd({})", list(v)),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "q{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dic{n}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "dp({a},{b})"),
            GroupSpec::Semidirect {
                normal,
                acting,
                action,
            } => {
                if normal.len() == 1 {
                    write!(f, "sd(c{},{acting},{})", normal[0], action[0][0])
                } else {
                    let rows: Vec<String> = action
                        .iter()
                        .map(|r| {
                            let r: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                            format!("[{}]", r.join(","))
                        })
                        .collect();
                    write!(f, "sd(a({}),{acting},[{}])", list(normal), rows.join(","))
                }
            }
            GroupSpec::FromTable(p) => write!(f, "table({})", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Spec(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("expected an integer"))
    }

    fn uint(&mut self) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.error("expected a non-negative integer"))
    }

    /// Either `name<int>` or `name(<int>)`.
    fn single(&mut self) -> Result<usize> {
        if self.eat(b'(') {
            let v = self.uint()?;
            self.expect(b')')?;
            Ok(v)
        } else {
            self.uint()
        }
    }

    /// `(<int>, ...)`, possibly empty.
    fn int_list(&mut self) -> Result<Vec<usize>> {
        self.expect(b'(')?;
        let mut v = Vec::new();
        if self.eat(b')') {
            return Ok(v);
        }
        loop {
            v.push(self.uint()?);
            if self.eat(b')') {
                return Ok(v);
            }
            self.expect(b',')?;
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<i64>>> {
        if self.peek() != Some(b'[') {
            return Ok(vec![vec![self.int()?]]);
        }
        self.expect(b'[')?;
        let mut rows = Vec::new();
        loop {
            self.expect(b'[')?;
            let mut row = vec![self.int()?];
            while self.eat(b',') {
                row.push(self.int()?);
            }
            self.expect(b']')?;
            rows.push(row);
            if self.eat(b']') {
                return Ok(rows);
            }
            self.expect(b',')?;
        }
    }

    fn abelian_factors(&mut self) -> Result<Vec<usize>> {
        match self.ident().as_str() {
            "c" | "z" => Ok(vec![self.single()?]),
            "a" => self.int_list(),
            _ => Err(self.error("expected an abelian spec (c<n> or a(...))")),
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name = self.ident();
        Ok(match name.as_str() {
            "c" | "z" => GroupSpec::Cyclic(self.single()?),
            "a" => GroupSpec::Abelian(self.int_list()?),
            "d" => GroupSpec::Dihedral(self.single()?),
            "gd" => GroupSpec::GeneralizedDihedral(self.int_list()?),
            "q" => GroupSpec::GeneralizedQuaternion(self.single()?),
            "dic" => GroupSpec::Dicyclic(self.single()?),
            "dp" => {
                self.expect(b'(')?;
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                self.expect(b')')?;
                GroupSpec::DirectProduct(Box::new(a), Box::new(b))
            }
            "sd" => {
                self.expect(b'(')?;
                let normal = self.abelian_factors()?;
                self.expect(b',')?;
                let acting = self.uint()?;
                self.expect(b',')?;
                let action = self.matrix()?;
                self.expect(b')')?;
                GroupSpec::Semidirect {
                    normal,
                    acting,
                    action,
                }
            }
            "table" => {
                self.expect(b'(')?;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b')' {
                    self.pos += 1;
                }
                let path = String::from_utf8_lossy(&self.src[start..self.pos])
                    .trim()
                    .to_string();
                self.expect(b')')?;
                GroupSpec::FromTable(PathBuf::from(path))
            }
            _ => return Err(self.error(&format!("unknown group family {name:?}"))),
        })
    }
}
