//! Signed permutations of m coordinates, their faithful action on 2m
//! points, the sign-forgetting projection, and the combinatorics of
//! lifting cycle types through that projection.
//!
//! Point labelling on 2m letters: index `i` is the positive copy of
//! coordinate `i`, index `m + i` the negative copy.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::modp::CycleType;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedError {
    NotABijection,
    /// Permutation of 2m points does not commute with the global flip.
    NotSignCompatible,
    OddDegree,
    /// m too large for the bitmask representation used here.
    Overscale,
}

impl fmt::Display for SignedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedError::NotABijection => write!(f, "coordinate images not a bijection"),
            SignedError::NotSignCompatible => {
                write!(f, "permutation does not respect the sign pairing")
            }
            SignedError::OddDegree => write!(f, "degree of paired action must be even"),
            SignedError::Overscale => write!(f, "too many coordinates for this operation"),
        }
    }
}

/// Signed permutation: coordinate permutation `s` together with signs
/// `eps[i] ∈ {+1, -1}` applied after `s`, so coordinate `i` maps to
/// `eps[s(i)] * s(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPerm {
    s: Permutation,
    eps: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(m: usize) -> SignedPerm {
        SignedPerm {
            s: Permutation::identity(m),
            eps: vec![1; m],
        }
    }

    pub fn new(s: Permutation, eps: Vec<i8>) -> Result<SignedPerm, SignedError> {
        if s.degree() != eps.len() || eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(SignedError::NotABijection);
        }
        Ok(SignedPerm { s, eps })
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }

    /// Underlying coordinate permutation (signs forgotten).
    pub fn kappa(&self) -> &Permutation {
        &self.s
    }

    pub fn signs(&self) -> &[i8] {
        &self.eps
    }

    /// Product of all signs; the two index-2 wreath subgroups are cut
    /// out by this being +1.
    pub fn sign_product(&self) -> i8 {
        self.eps.iter().product()
    }

    /// Faithful permutation of the 2m signed points.
    pub fn to_permutation(&self) -> Permutation {
        let m = self.m();
        let mut images = vec![0usize; 2 * m];
        for i in 0..m {
            let j = self.s.apply(i);
            if self.eps[j] == 1 {
                images[i] = j;
                images[m + i] = m + j;
            } else {
                images[i] = m + j;
                images[m + i] = j;
            }
        }
        Permutation::from_images(images).expect("signed perm gives bijection")
    }

    /// Inverse of [`SignedPerm::to_permutation`]; errors unless `p`
    /// commutes with the pairing `i <-> m+i`.
    pub fn from_permutation(p: &Permutation) -> Result<SignedPerm, SignedError> {
        let n = p.degree();
        if n % 2 != 0 {
            return Err(SignedError::OddDegree);
        }
        let m = n / 2;
        let mut images = vec![0usize; m];
        let mut eps = vec![1i8; m];
        for i in 0..m {
            let img = p.apply(i);
            let (j, e) = if img < m { (img, 1) } else { (img - m, -1) };
            if p.apply(m + i) != if e == 1 { m + j } else { j } {
                return Err(SignedError::NotSignCompatible);
            }
            images[i] = j;
            eps[j] = e;
        }
        let s = Permutation::from_images(images).map_err(|_| SignedError::NotABijection)?;
        Ok(SignedPerm { s, eps })
    }

    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        debug_assert_eq!(self.m(), other.m());
        let s = self.s.compose(&other.s);
        let mut eps = vec![1i8; self.m()];
        for i in 0..self.m() {
            let j = other.s.apply(i);
            eps[self.s.apply(j)] = other.eps[j] * self.eps[self.s.apply(j)];
        }
        SignedPerm { s, eps }
    }

    /// Number of coordinate cycles whose sign product is -1; the
    /// action on 2m points is always even.
    pub fn negative_cycle_count(&self) -> usize {
        self.s
            .cycles()
            .into_iter()
            .filter(|c| c.iter().map(|&i| self.eps[self.s.apply(i)]).product::<i8>() == -1)
            .count()
    }

    /// Cycle type on the 2m signed points: a coordinate d-cycle with
    /// sign product +1 splits into two d-cycles, with sign product -1
    /// it fuses into one 2d-cycle.
    pub fn action_cycle_type(&self) -> CycleType {
        let mut parts = Vec::new();
        for c in self.s.cycles() {
            let prod: i8 = c.iter().map(|&i| self.eps[self.s.apply(i)]).product();
            if prod == 1 {
                parts.push(c.len());
                parts.push(c.len());
            } else {
                parts.push(2 * c.len());
            }
        }
        CycleType::new(parts)
    }
}

/// Wreath-type group on 2m points generated by (the actions of) `base`
/// together with sign flips: all single flips, or only products of two
/// adjacent flips when `even_only` holds.
pub fn build_wreath(base: &PermGroup, even_only: bool) -> PermGroup {
    let m = base.degree();
    let mut gens: Vec<Permutation> = base
        .generators()
        .iter()
        .map(|g| {
            SignedPerm::new(g.clone(), vec![1; m])
                .expect("trivial signs")
                .to_permutation()
        })
        .collect();
    if even_only {
        for i in 0..m.saturating_sub(1) {
            let mut eps = vec![1i8; m];
            eps[i] = -1;
            eps[i + 1] = -1;
            gens.push(
                SignedPerm::new(Permutation::identity(m), eps)
                    .expect("flip pair")
                    .to_permutation(),
            );
        }
    } else {
        for i in 0..m {
            let mut eps = vec![1i8; m];
            eps[i] = -1;
            gens.push(
                SignedPerm::new(Permutation::identity(m), eps)
                    .expect("single flip")
                    .to_permutation(),
            );
        }
    }
    PermGroup::new(2 * m, gens).expect("degrees match")
}

/// One way a cycle type on 2m points can arise from a signed
/// permutation: list of coordinate cycles `(length, negative)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Realization {
    pub pieces: Vec<(usize, bool)>,
}

impl Realization {
    /// Order of any signed permutation with these coordinate cycles: a
    /// negative d-cycle contributes 2d, a positive one d.
    pub fn element_order(&self) -> u64 {
        self.pieces.iter().fold(1u64, |acc, &(d, neg)| {
            num_integer::lcm(acc, if neg { 2 * d as u64 } else { d as u64 })
        })
    }

    /// Order of the projected coordinate permutation.
    pub fn projection_order(&self) -> u64 {
        self.pieces
            .iter()
            .fold(1u64, |acc, &(d, _)| num_integer::lcm(acc, d as u64))
    }

    pub fn negative_count(&self) -> usize {
        self.pieces.iter().filter(|&&(_, neg)| neg).count()
    }

    pub fn projected_type(&self) -> CycleType {
        CycleType::new(self.pieces.iter().map(|&(d, _)| d).collect())
    }
}

/// All coordinate-cycle decompositions of a 2m-point cycle type under
/// signed permutations with an even number of negative cycles (the
/// index-2 subgroup). Empty when the type is not realized there.
pub fn realizations_of(t: &CycleType, m: usize) -> Vec<Realization> {
    if t.total() != 2 * m {
        return Vec::new();
    }
    let mut parts = t.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a)); // largest first
    let mut out = BTreeSet::new();
    let mut pieces = Vec::new();
    recurse(&mut parts, &mut pieces, &mut out);
    out.into_iter()
        .filter(|r| r.negative_count() % 2 == 0)
        .collect()
}

fn recurse(
    parts: &mut Vec<usize>,
    pieces: &mut Vec<(usize, bool)>,
    out: &mut BTreeSet<Realization>,
) {
    let Some(&d) = parts.first() else {
        let mut sorted = pieces.clone();
        sorted.sort();
        out.insert(Realization { pieces: sorted });
        return;
    };
    // option 1: d even and this part is a fused negative (d/2)-cycle
    if d % 2 == 0 {
        parts.remove(0);
        pieces.push((d / 2, true));
        recurse(parts, pieces, out);
        pieces.pop();
        parts.insert(0, d);
    }
    // option 2: pair with another part of the same length as a split
    // positive d-cycle
    if let Some(pos) = parts.iter().skip(1).position(|&x| x == d) {
        let idx = pos + 1;
        parts.remove(idx);
        parts.remove(0);
        pieces.push((d, false));
        recurse(parts, pieces, out);
        pieces.pop();
        parts.insert(0, d);
        parts.insert(idx, d);
    }
}

/// Spin of the even-weight sign vectors under the coordinate action of
/// the full symmetric group, over F2: dimensions of all submodules of
/// the even-weight space that are spanned by weight-class
/// representatives. For odd `m` the expected answer is `{0, m-1}`.
pub fn sign_module_submodule_dims(m: usize) -> Result<Vec<usize>, SignedError> {
    if m == 0 || m > 63 {
        return Err(SignedError::Overscale);
    }
    // submodule generated over F2 by an even-weight vector and its
    // S_m-translates; by symmetry one representative per even weight
    // suffices to enumerate the minimal submodules through each orbit
    let mut dims: BTreeSet<usize> = BTreeSet::new();
    dims.insert(0);
    for w in (2..=m).step_by(2) {
        let rep: u64 = (1u64 << w) - 1; // first w coordinates flipped
        let mut basis: Vec<u64> = Vec::new(); // row-echelon over F2
        let add = |mut v: u64, basis: &mut Vec<u64>| -> bool {
            for &b in basis.iter() {
                let pivot = 63 - b.leading_zeros();
                if v >> pivot & 1 == 1 {
                    v ^= b;
                }
            }
            if v == 0 {
                return false;
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
            true
        };
        add(rep, &mut basis);
        // closure under all transpositions (generate S_m) and addition
        let mut frontier = vec![rep];
        while let Some(v) = frontier.pop() {
            for i in 0..m {
                for j in (i + 1)..m {
                    let bi = v >> i & 1;
                    let bj = v >> j & 1;
                    if bi == bj {
                        continue;
                    }
                    let swapped = v ^ (1 << i) ^ (1 << j);
                    if add(swapped, &mut basis) {
                        frontier.push(swapped);
                    }
                }
            }
            // sums with current basis vectors stay in the submodule
            for &b in basis.clone().iter() {
                if add(v ^ b, &mut basis) {
                    frontier.push(v ^ b);
                }
            }
        }
        dims.insert(basis.len());
    }
    Ok(dims.into_iter().collect())
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_signed(m: usize) -> impl Strategy<Value = SignedPerm> {
        (
            Just(m),
            proptest::collection::vec(0usize..1_000_000, m),
            proptest::collection::vec(proptest::bool::ANY, m),
        )
            .prop_map(|(m, keys, flips)| {
                // rank the random keys to get a permutation
                let mut order: Vec<usize> = (0..m).collect();
                order.sort_by_key(|&i| (keys[i], i));
                let mut images = vec![0usize; m];
                for (rank, &i) in order.iter().enumerate() {
                    images[i] = rank;
                }
                let eps = flips.iter().map(|&b| if b { -1 } else { 1 }).collect();
                SignedPerm::new(Permutation::from_images(images).unwrap(), eps).unwrap()
            })
    }

    proptest! {
        #[test]
        fn action_type_matches_two_m_point_action(g in arb_signed(7)) {
            prop_assert_eq!(g.action_cycle_type(), g.to_permutation().cycle_type());
        }

        #[test]
        fn kappa_and_embedding_are_homomorphisms(
            a in arb_signed(6),
            b in arb_signed(6),
        ) {
            let ab = a.compose(&b);
            prop_assert_eq!(ab.kappa(), &a.kappa().compose(b.kappa()));
            prop_assert_eq!(
                ab.to_permutation(),
                a.to_permutation().compose(&b.to_permutation())
            );
            prop_assert_eq!(
                ab.sign_product(),
                a.sign_product() * b.sign_product()
            );
        }

        #[test]
        fn round_trip_through_permutation(g in arb_signed(8)) {
            prop_assert_eq!(SignedPerm::from_permutation(&g.to_permutation()), Ok(g));
        }

        #[test]
        fn own_realization_is_enumerated(g in arb_signed(5)) {
            prop_assume!(g.negative_cycle_count() % 2 == 0);
            let mut pieces: Vec<(usize, bool)> = g
                .kappa()
                .cycles()
                .into_iter()
                .map(|c| {
                    let neg = c
                        .iter()
                        .map(|&i| g.signs()[g.kappa().apply(i)])
                        .product::<i8>()
                        == -1;
                    (c.len(), neg)
                })
                .collect();
            pieces.sort();
            let own = Realization { pieces };
            let t = g.action_cycle_type();
            prop_assert!(realizations_of(&t, 5).contains(&own));
            prop_assert_eq!(own.element_order(), g.to_permutation().order());
            prop_assert_eq!(own.projection_order(), g.kappa().order());
        }
    }
}
