//! Signs, signed flats, covectors and their products.
//!
//! A covector is stored as three masks (zero, plus, minus); positions in
//! none of them carry the sign `1`. Its string form uses one character per
//! element from the alphabet `0 + - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};
use crate::flats::{FlatId, FlatLattice};

/// One of the four signs, ordered as the diamond `0 < +, - < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
    One,
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            s => s,
        }
    }
}

impl Sign {
    pub fn to_char(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::One => '1',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            '1' => Some(Sign::One),
            _ => None,
        }
    }

    /// Position in the byte order `+ < - < 0 < 1` of the string alphabet.
    fn byte_rank(self) -> u8 {
        self.to_char() as u8
    }
}

impl PartialOrd for Sign {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use Sign::*;
        match (self, other) {
            (a, b) if a == b => Some(Ordering::Equal),
            (Zero, _) | (_, One) => Some(Ordering::Less),
            (_, Zero) | (One, _) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

/// A total map from the ground set to signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    len: u8,
    zero: ElemSet,
    plus: ElemSet,
    minus: ElemSet,
}

impl SignVector {
    /// All ones.
    pub fn ones(len: usize) -> Self {
        assert!(len <= bits::MAX_GROUND);
        SignVector { len: len as u8, zero: 0, plus: 0, minus: 0 }
    }

    pub fn from_masks(len: usize, zero: ElemSet, plus: ElemSet, minus: ElemSet) -> Self {
        debug_assert!(zero & plus == 0 && zero & minus == 0 && plus & minus == 0);
        debug_assert!(bits::is_subset(zero | plus | minus, bits::full(len)));
        SignVector { len: len as u8, zero, plus, minus }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut v = SignVector::ones(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn zero(&self) -> ElemSet {
        self.zero
    }

    #[inline]
    pub fn plus(&self) -> ElemSet {
        self.plus
    }

    #[inline]
    pub fn minus(&self) -> ElemSet {
        self.minus
    }

    /// Positions carrying `+` or `-`.
    #[inline]
    pub fn signed(&self) -> ElemSet {
        self.plus | self.minus
    }

    #[inline]
    pub fn one(&self) -> ElemSet {
        bits::full(self.len()) & !(self.zero | self.plus | self.minus)
    }

    pub fn get(&self, i: usize) -> Sign {
        if bits::contains(self.zero, i) {
            Sign::Zero
        } else if bits::contains(self.plus, i) {
            Sign::Plus
        } else if bits::contains(self.minus, i) {
            Sign::Minus
        } else {
            Sign::One
        }
    }

    pub fn set(&mut self, i: usize, s: Sign) {
        let b = bits::bit(i);
        self.zero &= !b;
        self.plus &= !b;
        self.minus &= !b;
        match s {
            Sign::Zero => self.zero |= b,
            Sign::Plus => self.plus |= b,
            Sign::Minus => self.minus |= b,
            Sign::One => {}
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn negate(&self) -> Self {
        SignVector { plus: self.minus, minus: self.plus, ..*self }
    }

    /// Componentwise: take `b(e)` where it lies strictly above `a(e)`.
    pub fn star(&self, b: &SignVector) -> SignVector {
        let a = self;
        let b_one = b.one();
        SignVector {
            len: a.len,
            zero: a.zero & b.zero,
            plus: (a.plus & !b_one) | (a.zero & b.plus),
            minus: (a.minus & !b_one) | (a.zero & b.minus),
        }
    }

    /// Componentwise diamond comparison.
    pub fn leq(&self, b: &SignVector) -> bool {
        let b_one = b.one();
        bits::is_subset(self.plus, b.plus | b_one)
            && bits::is_subset(self.minus, b.minus | b_one)
            && bits::is_subset(self.one(), b_one)
    }

    /// `{e : a(e) = -b(e) ∈ {+,-}}`
    pub fn separation_set(&self, b: &SignVector) -> ElemSet {
        (self.plus & b.minus) | (self.minus & b.plus)
    }

    /// Keeps the positions in `w`, packed in canonical order.
    pub fn restrict(&self, w: ElemSet) -> SignVector {
        SignVector {
            len: bits::len(w) as u8,
            zero: bits::compress(self.zero, w),
            plus: bits::compress(self.plus, w),
            minus: bits::compress(self.minus, w),
        }
    }

    /// Sign vector equal to `self` on `keep` and `1` elsewhere.
    pub fn mask_to(&self, keep: ElemSet) -> SignVector {
        SignVector { len: self.len, zero: self.zero & keep, plus: self.plus & keep, minus: self.minus & keep }
    }

    /// True if `self` and `other` agree at every position of `on`.
    pub fn agrees_on(&self, other: &SignVector, on: ElemSet) -> bool {
        (self.zero ^ other.zero) & on == 0 && (self.plus ^ other.plus) & on == 0 && (self.minus ^ other.minus) & on == 0
    }
}

impl Ord for SignVector {
    /// Lexicographic order of the sign strings, with `+ < - < 0 < 1`.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len) as usize;
        let diff = ((self.zero ^ other.zero) | (self.plus ^ other.plus) | (self.minus ^ other.minus)) & bits::full(common);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros() as usize;
        self.get(i).byte_rank().cmp(&other.get(i).byte_rank())
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| Sign::from_char(c).ok_or_else(|| Error::Malformed(format!("bad sign `{c}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if signs.len() > bits::MAX_GROUND {
            return Err(Error::GroundTooLarge(signs.len()));
        }
        Ok(SignVector::from_signs(&signs))
    }
}

/// A covector together with its support flat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Covector {
    pub signs: SignVector,
    pub support: FlatId,
}

impl Ord for Covector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signs.cmp(&other.signs)
    }
}

impl PartialOrd for Covector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.signs.fmt(f)
    }
}

impl Covector {
    pub fn leq(&self, other: &Covector) -> bool {
        self.signs.leq(&other.signs)
    }

    pub fn negate(&self) -> Covector {
        Covector { signs: self.signs.negate(), support: self.support }
    }

    pub fn separation_set(&self, other: &Covector) -> ElemSet {
        self.signs.separation_set(&other.signs)
    }

    pub fn star(&self, other: &Covector) -> SignVector {
        self.signs.star(&other.signs)
    }
}

/// A flat with a sign on each of its continuations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedFlat {
    pub flat: FlatId,
    pub plus: ElemSet,
    pub minus: ElemSet,
}

impl SignedFlat {
    pub fn new(lat: &FlatLattice, flat: FlatId, plus: ElemSet, minus: ElemSet) -> Result<Self> {
        if flat >= lat.len() {
            return Err(Error::Precondition(format!("no flat with id {flat}")));
        }
        let g = lat.gamma(flat);
        if plus & minus != 0 || plus | minus != g {
            return Err(Error::Precondition(format!(
                "assignment must cover Γ = {} exactly once",
                lat.system().format_set(g)
            )));
        }
        Ok(SignedFlat { flat, plus, minus })
    }

    /// Order on signed flats: `A ≤ B` and the signs agree on `Γ(A) ∩ Γ(B)`.
    pub fn leq(&self, lat: &FlatLattice, other: &SignedFlat) -> bool {
        let common = lat.gamma(self.flat) & lat.gamma(other.flat);
        lat.leq(self.flat, other.flat) && (self.plus ^ other.plus) & common == 0
    }

    /// `(A, a) ∘ (B, b) = (A ∨ B, c)` with `c = a` on `Γ(A)` and `b` elsewhere.
    pub fn product(&self, lat: &FlatLattice, other: &SignedFlat) -> SignedFlat {
        let j = lat.join(self.flat, other.flat);
        let g = lat.gamma(j);
        let ga = lat.gamma(self.flat);
        let plus = g & ((ga & self.plus) | (!ga & other.plus));
        SignedFlat { flat: j, plus, minus: g & !plus }
    }
}

/// The covector of a signed flat: zero on ξ, its signs on Γ, one elsewhere.
pub fn covector_of(lat: &FlatLattice, sf: &SignedFlat) -> Covector {
    let n = lat.system().n();
    Covector { signs: SignVector::from_masks(n, lat.xi(sf.flat), sf.plus, sf.minus), support: sf.flat }
}

pub fn signed_flat_of(c: &Covector) -> SignedFlat {
    SignedFlat { flat: c.support, plus: c.signs.plus, minus: c.signs.minus }
}

/// The support of `v` if it is a covector of the greedoid.
pub fn support_of(lat: &FlatLattice, v: &SignVector) -> Option<FlatId> {
    if v.len() != lat.system().n() {
        return None;
    }
    let a = lat.mu(v.zero);
    (lat.xi(a) == v.zero && lat.gamma(a) == v.signed()).then_some(a)
}

pub fn to_covector(lat: &FlatLattice, v: &SignVector) -> Result<Covector> {
    support_of(lat, v)
        .map(|support| Covector { signs: *v, support })
        .ok_or_else(|| Error::Precondition(format!("{v} is not a covector of the greedoid")))
}

/// `a ∘ b`: the star product on `Γ(A∨B) ∪ ξ(A∨B)`, one elsewhere.
#[inline]
pub fn circ(lat: &FlatLattice, a: &Covector, b: &Covector) -> Covector {
    let j = lat.join(a.support, b.support);
    let keep = lat.gamma(j) | lat.xi(j);
    let signs = a.signs.star(&b.signs).mask_to(keep);
    debug_assert!(signs.zero() == lat.xi(j) && signs.signed() == lat.gamma(j));
    Covector { signs, support: j }
}

/// Largest `|Γ(A)|` accepted by [`all_covectors`].
pub const MAX_GAMMA: usize = 20;

/// Every covector of the greedoid, sorted by sign string.
pub fn all_covectors(lat: &FlatLattice) -> Result<Vec<Covector>> {
    let n = lat.system().n();
    let mut out = Vec::new();
    for f in lat.flats() {
        let k = bits::len(f.gamma);
        if k > MAX_GAMMA {
            return Err(Error::CapExceeded { what: format!("|Γ| of flat {}", lat.label(f.id)), limit: MAX_GAMMA, actual: k });
        }
        for p in bits::subsets(f.gamma) {
            out.push(Covector { signs: SignVector::from_masks(n, f.xi, p, f.gamma & !p), support: f.id });
        }
    }
    out.sort();
    Ok(out)
}
