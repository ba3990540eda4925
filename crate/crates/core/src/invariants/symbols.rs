use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::events::CeKind;
use super::group::{FinAbGroup, GroupElement};
use super::module::{m_structure, MStructure};
use super::monomial::MonomialClass;
use crate::error::{Error, Result};
use crate::scalar::Sign;

/// Largest order accepted by [`count_en`].
pub const MAX_COUNT_ORDER: u32 = 4;
/// Largest group accepted by [`count_en`].
pub const MAX_COUNT_GROUP: u64 = 16;

/// One of the eight symbols of `C₁`: an event kind with a degree label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct C1Symbol {
    pub kind: CeKind,
    pub sign: Sign,
}

impl C1Symbol {
    pub fn new(kind: CeKind, sign: Sign) -> Self {
        C1Symbol { kind, sign }
    }

    /// All eight symbols.
    pub fn all() -> Vec<C1Symbol> {
        let mut out = Vec::with_capacity(8);
        for kind in [CeKind::E, CeKind::H, CeKind::T, CeKind::Q] {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(C1Symbol::new(kind, sign));
            }
        }
        out
    }
}

impl fmt::Display for C1Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{:?}{sign}", self.kind)
    }
}

impl FromStr for C1Symbol {
    type Err = Error;

    /// Parses `"T+"`, `"E-"` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("bad symbol {s:?}"));
        let mut chars = s.trim().chars();
        let kind = match chars.next().ok_or_else(bad)? {
            'E' => CeKind::E,
            'H' => CeKind::H,
            'T' => CeKind::T,
            'Q' => CeKind::Q,
            _ => return Err(bad()),
        };
        let sign = match chars.next().ok_or_else(bad)? {
            '+' => Sign::Plus,
            '-' => Sign::Minus,
            _ => return Err(bad()),
        };
        if chars.next().is_some() {
            return Err(bad());
        }
        Ok(C1Symbol::new(kind, sign))
    }
}

impl Serialize for C1Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for C1Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An unordered tuple over `Y = {T₊, H₊, Q₊}`, stored as multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymbolTuple {
    pub t: u32,
    pub h: u32,
    pub q: u32,
}

impl SymbolTuple {
    pub fn new(t: u32, h: u32, q: u32) -> Self {
        SymbolTuple { t, h, q }
    }

    pub fn len(&self) -> u32 {
        self.t + self.h + self.q
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The monomial class of `z` under `T₊ ↦ t`, `H₊ ↦ p`, `Q₊ ↦ q`.
    pub fn class(&self) -> MonomialClass {
        MonomialClass::new(self.t, self.h, self.q)
    }

    /// Contains `H₊` or `Q₊`, so the value must lie in `B = {x : 2x = 0}`.
    pub fn is_torsion(&self) -> bool {
        self.h + self.q > 0
    }

    /// The tuple that `H₊H₊Q₊ = H₊Q₊Q₊` identifies this one with, replacing
    /// one `H₊` by a `Q₊`.
    pub fn linked(&self) -> Option<SymbolTuple> {
        (self.h >= 2 && self.q >= 1).then(|| SymbolTuple::new(self.t, self.h - 1, self.q + 1))
    }
}

impl Ord for SymbolTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), Reverse(self.t), Reverse(self.h), self.q).cmp(&(
            other.len(),
            Reverse(other.t),
            Reverse(other.h),
            other.q,
        ))
    }
}

impl PartialOrd for SymbolTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SymbolTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("T+", self.t), ("H+", self.h), ("Q+", self.q)] {
            parts.extend(std::iter::repeat_n(name, k as usize));
        }
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for SymbolTuple {
    type Err = Error;

    /// Parses a bracketed list of `C₁` symbols and reduces it.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Malformed(format!("bad tuple {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(SymbolTuple::default());
        }
        let raw = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<C1Symbol>>>()?;
        Ok(delta_reduce(&raw))
    }
}

impl Serialize for SymbolTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SymbolTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Reduces a tuple of `C₁` symbols into `Y`: `T± ↦ T₊`, `E±, H± ↦ H₊`,
/// `Q± ↦ Q₊`.
pub fn delta_reduce(raw: &[C1Symbol]) -> SymbolTuple {
    let mut z = SymbolTuple::default();
    for s in raw {
        match s.kind {
            CeKind::T => z.t += 1,
            CeKind::E | CeKind::H => z.h += 1,
            CeKind::Q => z.q += 1,
        }
    }
    z
}

/// `r(z) = max(0, m_H − 1) + max(0, m_Q − 1)`.
pub fn tuple_repetition(z: SymbolTuple) -> u32 {
    z.h.saturating_sub(1) + z.q.saturating_sub(1)
}

/// Every tuple of size `n`, in tuple order.
pub fn all_tuples(n: u32) -> Vec<SymbolTuple> {
    let mut out = Vec::new();
    for t in (0..=n).rev() {
        for h in (0..=n - t).rev() {
            out.push(SymbolTuple::new(t, h, n - t - h));
        }
    }
    out
}

/// A function on the size-`n` tuples over `Y` with values in a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolFunction {
    pub n: u32,
    pub group: FinAbGroup,
    pub table: BTreeMap<SymbolTuple, GroupElement>,
}

fn admissible(group: &FinAbGroup, z: SymbolTuple, x: &GroupElement) -> bool {
    group.is_divisible_by_pow2(x, tuple_repetition(z))
}

impl SymbolFunction {
    /// Checks that the table is total on size-`n` tuples, has values in the
    /// group, and sends `H₊`/`Q₊`-containing tuples to 2-torsion.
    pub fn check_delta(&self) -> Result<()> {
        let tuples = all_tuples(self.n);
        if let Some(z) = self.table.keys().find(|z| z.len() != self.n) {
            return Err(Error::MalformedFunction(format!(
                "tuple {z} has size {}, expected {}",
                z.len(),
                self.n
            )));
        }
        for z in &tuples {
            let x = self
                .table
                .get(z)
                .ok_or_else(|| Error::MalformedFunction(format!("no value for {z}")))?;
            if !self.group.contains(x) {
                return Err(Error::MalformedFunction(format!(
                    "value {:?} at {z} is not a reduced element of {}",
                    x.0, self.group
                )));
            }
            if z.is_torsion() && !self.group.is_two_torsion(x) {
                return Err(Error::MalformedFunction(format!(
                    "value {:?} at {z} is not 2-torsion",
                    x.0
                )));
            }
        }
        Ok(())
    }

    /// Membership in `E_n`: the `H₊H₊Q₊ = H₊Q₊Q₊` relation in every context,
    /// and `g(z) ∈ 2^{r(z)}G` for every tuple.
    pub fn is_in_en(&self) -> Result<bool> {
        self.check_delta()?;
        for (z, x) in &self.table {
            if let Some(w) = z.linked() {
                if self.table[&w] != *x {
                    return Ok(false);
                }
            }
            if !admissible(&self.group, *z, x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The function `z ↦ φ(class(z)) = 2^{r(z)}·φ(ζ_{class(z)})` for a
    /// homomorphism `φ: M_n → G`, given by the images of the summand
    /// generators of [`m_structure`] in order.
    pub fn pull_back(group: &FinAbGroup, n: u32, images: &[GroupElement]) -> Result<Self> {
        let structure = m_structure(n)?;
        let phi = hom_images(group, &structure, images)?;
        let table = all_tuples(n)
            .into_iter()
            .map(|z| {
                let x = &phi[&z.class()];
                (z, group.scale(x, 1i64 << tuple_repetition(z)))
            })
            .collect();
        Ok(SymbolFunction {
            n,
            group: group.clone(),
            table,
        })
    }
}

fn hom_images(
    group: &FinAbGroup,
    structure: &MStructure,
    images: &[GroupElement],
) -> Result<BTreeMap<MonomialClass, GroupElement>> {
    if images.len() != structure.summands.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            images.len(),
            structure.summands.len()
        )));
    }
    let mut phi = BTreeMap::new();
    for (s, x) in structure.summands.iter().zip(images) {
        if !group.contains(x) {
            return Err(Error::Malformed(format!(
                "{:?} is not an element of {group}",
                x.0
            )));
        }
        if s.modulus != 0 && !group.is_zero(&group.scale(x, s.modulus as i64)) {
            return Err(Error::Malformed(format!(
                "image of ζ[{}] has order not dividing {}",
                s.generator, s.modulus
            )));
        }
        phi.insert(s.generator, x.clone());
    }
    Ok(phi)
}

/// `|E_n(G)|` by enumeration of tables.
///
/// The constraints only relate tuples joined by `H₊H₊Q₊ = H₊Q₊Q₊`, so the
/// tables are enumerated separately on each connected set of linked tuples
/// and the counts multiplied.
pub fn count_en(group: &FinAbGroup, n: u32) -> Result<u128> {
    let order = group
        .order()
        .ok_or_else(|| Error::Guard(format!("count_en needs a finite group, got {group}")))?;
    if order > MAX_COUNT_GROUP {
        return Err(Error::Guard(format!(
            "group order {order} exceeds {MAX_COUNT_GROUP}"
        )));
    }
    if n > MAX_COUNT_ORDER {
        return Err(Error::Guard(format!("order {n} exceeds {MAX_COUNT_ORDER}")));
    }
    let elements = group.elements().expect("finite group");
    let tuples = all_tuples(n);
    let index: BTreeMap<SymbolTuple, usize> =
        tuples.iter().enumerate().map(|(i, z)| (*z, i)).collect();

    let mut parent: Vec<usize> = (0..tuples.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for (i, z) in tuples.iter().enumerate() {
        if let Some(w) = z.linked() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, index[&w]));
            parent[a] = b;
        }
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..tuples.len() {
        let root = find(&mut parent, i);
        components.entry(root).or_default().push(i);
    }

    let candidates: Vec<Vec<&GroupElement>> = tuples
        .iter()
        .map(|z| {
            elements
                .iter()
                .filter(|x| !z.is_torsion() || group.is_two_torsion(x))
                .filter(|x| admissible(group, *z, x))
                .collect()
        })
        .collect();

    let mut total: u128 = 1;
    for members in components.values() {
        let mut assigned: BTreeMap<usize, &GroupElement> = BTreeMap::new();
        let count = count_component(&tuples, &candidates, members, 0, &mut assigned);
        total = total
            .checked_mul(count)
            .ok_or_else(|| Error::Guard("count overflows u128".into()))?;
    }
    Ok(total)
}

fn count_component<'a>(
    tuples: &[SymbolTuple],
    candidates: &[Vec<&'a GroupElement>],
    members: &[usize],
    pos: usize,
    assigned: &mut BTreeMap<usize, &'a GroupElement>,
) -> u128 {
    let Some(&i) = members.get(pos) else {
        return 1;
    };
    let z = tuples[i];
    let mut count = 0;
    for &x in &candidates[i] {
        let consistent = assigned.iter().all(|(&j, &y)| {
            let w = tuples[j];
            let joined = z.linked() == Some(w) || w.linked() == Some(z);
            !joined || x == y
        });
        if !consistent {
            continue;
        }
        assigned.insert(i, x);
        count += count_component(tuples, candidates, members, pos + 1, assigned);
        assigned.remove(&i);
    }
    count
}

/// `|Hom(M_n, G)|` from the cyclic decomposition of `M_n`.
pub fn hom_count(group: &FinAbGroup, n: u32) -> Result<u128> {
    let structure = m_structure(n)?;
    group
        .hom_count_from(&structure.factors())
        .ok_or_else(|| Error::Guard(format!("Hom(M_{n}, {group}) is infinite or too large")))
}

/// A value for each of the eight `C₁` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AssignmentRepr", into = "AssignmentRepr")]
pub struct C1Assignment {
    group: FinAbGroup,
    values: BTreeMap<C1Symbol, GroupElement>,
}

#[derive(Serialize, Deserialize)]
struct AssignmentRepr {
    group: FinAbGroup,
    values: BTreeMap<C1Symbol, Vec<i64>>,
}

impl TryFrom<AssignmentRepr> for C1Assignment {
    type Error = Error;
    fn try_from(r: AssignmentRepr) -> Result<Self> {
        let group = r.group;
        let values = r
            .values
            .into_iter()
            .map(|(s, v)| Ok((s, group.element(&v)?)))
            .collect::<Result<_>>()?;
        C1Assignment::new(group, values)
    }
}

impl From<C1Assignment> for AssignmentRepr {
    fn from(a: C1Assignment) -> Self {
        AssignmentRepr {
            group: a.group,
            values: a.values.into_iter().map(|(s, v)| (s, v.0)).collect(),
        }
    }
}

impl C1Assignment {
    /// Requires a reduced value for every symbol.
    pub fn new(group: FinAbGroup, values: BTreeMap<C1Symbol, GroupElement>) -> Result<Self> {
        for s in C1Symbol::all() {
            let x = values
                .get(&s)
                .ok_or_else(|| Error::Malformed(format!("no value for {s}")))?;
            if !group.contains(x) {
                return Err(Error::Malformed(format!(
                    "{:?} is not an element of {group}",
                    x.0
                )));
            }
        }
        Ok(C1Assignment { group, values })
    }

    /// `g₁ᵁ` on `G_U`: `T± ↦ t`, `E±, H± ↦ p`, `Q± ↦ q`.
    pub fn universal() -> Self {
        let group = FinAbGroup::universal();
        let values = C1Symbol::all()
            .into_iter()
            .map(|s| {
                let v = match s.kind {
                    CeKind::T => vec![1, 0, 0],
                    CeKind::E | CeKind::H => vec![0, 1, 0],
                    CeKind::Q => vec![0, 0, 1],
                };
                (s, GroupElement(v))
            })
            .collect();
        C1Assignment { group, values }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn get(&self, kind: CeKind, sign: Sign) -> &GroupElement {
        &self.values[&C1Symbol::new(kind, sign)]
    }
}

/// Whether an assignment satisfies `2H_e = 2Q_e = 0` and the relation
/// families (1)–(6) for both `e` and every choice of the `±` signs:
///
/// 1. `0 = E_e ± H_e`
/// 2. `0 = T_e − T_{−e}`
/// 3. `0 = T_{−e} − T_e − E_{−e} + E_e`
/// 4. `0 = −T_e + T_{−e} ± H_{−e} ± H_e`
/// 5. `0 = ±Q_e ± Q_{−e} − T_e + T_{−e}`
/// 6. `0 = 5(±Q_e) + 5(±Q_{−e})`
pub fn codim2_relations_check(g1: &C1Assignment) -> bool {
    let g = &g1.group;
    let signs = [1i64, -1];
    for e in [Sign::Plus, Sign::Minus] {
        let ne = -e;
        let get = |k| g1.get(k, e);
        let get_n = |k| g1.get(k, ne);
        let (t, tn) = (get(CeKind::T), get_n(CeKind::T));
        let (ee, en) = (get(CeKind::E), get_n(CeKind::E));
        let (h, hn) = (get(CeKind::H), get_n(CeKind::H));
        let (q, qn) = (get(CeKind::Q), get_n(CeKind::Q));
        if !g.is_two_torsion(h) || !g.is_two_torsion(q) {
            return false;
        }
        if !g.is_zero(&g.combine(&[(1, t), (-1, tn)])) {
            return false;
        }
        if !g.is_zero(&g.combine(&[(1, tn), (-1, t), (-1, en), (1, ee)])) {
            return false;
        }
        for s1 in signs {
            if !g.is_zero(&g.combine(&[(1, ee), (s1, h)])) {
                return false;
            }
            for s2 in signs {
                let rel4 = g.combine(&[(-1, t), (1, tn), (s1, hn), (s2, h)]);
                let rel5 = g.combine(&[(s1, q), (s2, qn), (-1, t), (1, tn)]);
                let rel6 = g.combine(&[(5 * s1, q), (5 * s2, qn)]);
                if !(g.is_zero(&rel4) && g.is_zero(&rel5) && g.is_zero(&rel6)) {
                    return false;
                }
            }
        }
    }
    true
}
