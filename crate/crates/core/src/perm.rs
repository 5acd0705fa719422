//! Permutation-group engine: deterministic Schreier-Sims base and strong
//! generating set, orbits, point stabilizers, transitivity degrees,
//! derived series, conjugacy classes and normal-subgroup enumeration by
//! closed class unions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::modp::CycleType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    NotABijection,
    DegreeMismatch,
    PointOutOfRange,
    /// Enumeration-based operation refused beyond the configured cap.
    Overscale,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection => write!(f, "images do not form a bijection"),
            PermError::DegreeMismatch => write!(f, "permutation degrees differ"),
            PermError::PointOutOfRange => write!(f, "point out of range"),
            PermError::Overscale => write!(f, "group too large for enumeration-based operation"),
        }
    }
}

/// Permutation of `{0, .., n-1}` by its image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles; points absent from all cycles are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(PermError::PointOutOfRange);
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().into_iter().map(|c| c.len()).collect())
    }

    pub fn sign(&self) -> i8 {
        self.cycle_type().sign()
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .into_iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

struct Level {
    point: usize,
    /// Strong generators of the stabilizer of the base prefix up to and
    /// excluding this level's point.
    gens: Vec<Permutation>,
    /// orbit point -> transversal element u with u(point) = orbit point
    transversal: BTreeMap<usize, Permutation>,
}

/// Base and strong generating set, built by the deterministic
/// Schreier-Sims procedure (base points chosen in ascending order past
/// any caller-supplied prefix).
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, gens: &[Permutation], base_hint: &[usize]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for &p in base_hint {
            chain.levels.push(Level {
                point: p,
                gens: Vec::new(),
                transversal: BTreeMap::new(),
            });
        }
        for g in gens {
            if !g.is_identity() {
                chain.insert_gen(g.clone());
            }
        }
        for l in (0..chain.levels.len()).rev() {
            chain.close_level(l);
        }
        for l in 0..chain.levels.len() {
            chain.recompute_transversal(l);
        }
        chain
    }

    fn insert_gen(&mut self, g: Permutation) {
        let mut j = 0;
        while j < self.levels.len() && g.apply(self.levels[j].point) == self.levels[j].point {
            j += 1;
        }
        if j == self.levels.len() {
            let point = (0..self.degree)
                .find(|&x| g.apply(x) != x)
                .expect("non-identity generator moves a point");
            self.levels.push(Level {
                point,
                gens: Vec::new(),
                transversal: BTreeMap::new(),
            });
        }
        for level in self.levels.iter_mut().take(j + 1) {
            level.gens.push(g.clone());
        }
    }

    fn recompute_transversal(&mut self, l: usize) {
        let point = self.levels[l].point;
        let gens = self.levels[l].gens.clone();
        let mut transversal = BTreeMap::new();
        transversal.insert(point, Permutation::identity(self.degree));
        let mut frontier = vec![point];
        while let Some(b) = frontier.pop() {
            let u = transversal[&b].clone();
            for s in &gens {
                let img = s.apply(b);
                if !transversal.contains_key(&img) {
                    transversal.insert(img, s.compose(&u));
                    frontier.push(img);
                }
            }
        }
        self.levels[l].transversal = transversal;
    }

    /// Sift `g` through levels `from..`; returns the residue and the
    /// level where sifting stopped.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let img = g.apply(self.levels[l].point);
            match self.levels[l].transversal.get(&img) {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    /// Verify all Schreier generators of level `l` sift to the identity,
    /// extending deeper levels as needed.
    fn close_level(&mut self, l: usize) {
        self.recompute_transversal(l);
        loop {
            let mut dirty = false;
            let orbit: Vec<usize> = self.levels[l].transversal.keys().copied().collect();
            'outer: for b in orbit {
                let u_b = self.levels[l].transversal[&b].clone();
                let gens = self.levels[l].gens.clone();
                for s in gens {
                    let img = s.apply(b);
                    let u_img = self.levels[l].transversal[&img].clone();
                    let schreier = u_img.inverse().compose(&s).compose(&u_b);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(schreier, l + 1);
                    if h.is_identity() && j == self.levels.len() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let point = (0..self.degree)
                            .find(|&x| h.apply(x) != x)
                            .expect("residue moves a point");
                        self.levels.push(Level {
                            point,
                            gens: Vec::new(),
                            transversal: BTreeMap::new(),
                        });
                    }
                    for level in self.levels.iter_mut().take(j + 1).skip(l + 1) {
                        level.gens.push(h.clone());
                    }
                    for ll in (l + 1..=j).rev() {
                        self.close_level(ll);
                    }
                    dirty = true;
                    break 'outer;
                }
            }
            if !dirty {
                return;
            }
        }
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::one();
        for l in &self.levels {
            o *= BigUint::from(l.transversal.len());
        }
        o
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// All group elements, in a deterministic order; `None` when the
    /// order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        if self.order() > BigUint::from(cap) {
            return None;
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.transversal.len());
            for u in l.transversal.values() {
                for e in &out {
                    next.push(u.compose(e));
                }
            }
            out = next;
        }
        Some(out)
    }

    fn strong_gens_fixing_prefix(&self, levels: usize) -> Vec<Permutation> {
        if levels >= self.levels.len() {
            return Vec::new();
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in &self.levels[levels].gens {
            if seen.insert(g.clone()) {
                out.push(g.clone());
            }
        }
        out
    }
}

/// Permutation group on `degree` points, given by generators; the
/// Schreier-Sims chain is built at construction so later queries are
/// read-only.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
}

/// Cap on element enumeration used by conjugacy-class based operations.
pub const ENUMERATION_CAP: usize = 100_000;
/// Cap on the number of conjugacy classes for normal-subgroup search.
pub const CLASS_CAP: usize = 25;

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup, PermError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch);
        }
        let chain = StabChain::build(degree, &gens, &[]);
        Ok(PermGroup {
            degree,
            gens,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    /// Symmetric group generated by a transposition and an m-cycle.
    pub fn symmetric(m: usize) -> PermGroup {
        if m < 2 {
            return PermGroup::trivial(m);
        }
        let transposition = Permutation::from_cycles(m, &[&[0, 1]]).unwrap();
        let cycle: Vec<usize> = (0..m).collect();
        let mcycle = Permutation::from_cycles(m, &[&cycle]).unwrap();
        PermGroup::new(m, vec![transposition, mcycle]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        self.chain.elements(cap)
    }

    /// Orbit partition of the points under the generators.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for g in &self.gens {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbits().len() == 1
    }

    /// Stabilizer of one point, with strong generators from a chain
    /// rebased at that point.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange);
        }
        let chain = StabChain::build(self.degree, &self.gens, &[point]);
        let gens = chain.strong_gens_fixing_prefix(1);
        PermGroup::new(self.degree, gens)
    }

    /// Transitive with a point stabilizer transitive on the rest.
    pub fn is_doubly_transitive(&self) -> bool {
        if self.degree < 2 || !self.is_transitive() {
            return false;
        }
        let stab = self.point_stabilizer(0).expect("point 0 in range");
        let orbits = stab.orbits();
        orbits.len() == 2
    }

    /// Normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut sub_gens: Vec<Permutation> = Vec::new();
        let mut chain = StabChain::build(self.degree, &sub_gens, &[]);
        let mut queue: Vec<Permutation> = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && !chain.contains(&c) {
                    sub_gens.push(c.clone());
                    chain = StabChain::build(self.degree, &sub_gens, &[]);
                    queue.push(c);
                }
            }
        }
        while let Some(h) = queue.pop() {
            for g in &self.gens {
                let k = h.conjugate_by(g);
                if !chain.contains(&k) {
                    sub_gens.push(k.clone());
                    chain = StabChain::build(self.degree, &sub_gens, &[]);
                    queue.push(k);
                }
            }
        }
        PermGroup {
            degree: self.degree,
            gens: sub_gens,
            chain,
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Complete conjugacy classes as `(representative, size)`, identity
    /// class first, by enumeration up to [`ENUMERATION_CAP`].
    pub fn conjugacy_classes(&self) -> Result<Vec<(Permutation, usize)>, PermError> {
        let elements = self
            .chain
            .elements(ENUMERATION_CAP)
            .ok_or(PermError::Overscale)?;
        let index: BTreeMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes: Vec<(Permutation, usize)> = Vec::new();
        let mut sorted: Vec<usize> = (0..elements.len()).collect();
        sorted.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
        for &start in &sorted {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut size = 0usize;
            let mut frontier = vec![start];
            class_of[start] = cid;
            while let Some(x) = frontier.pop() {
                size += 1;
                for g in &self.gens {
                    let y = elements[x].conjugate_by(g);
                    let yi = *index.get(&y).expect("conjugate stays in group");
                    if class_of[yi] == usize::MAX {
                        class_of[yi] = cid;
                        frontier.push(yi);
                    }
                }
            }
            classes.push((elements[start].clone(), size));
        }
        // identity class (size 1, representative id) first
        classes.sort_by_key(|(rep, _)| !rep.is_identity());
        Ok(classes)
    }

    /// All normal subgroups, each a class union containing the identity
    /// and closed under multiplication, found as joins of single-class
    /// closures in the class-product lattice.
    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>, PermError> {
        let elements = self
            .chain
            .elements(ENUMERATION_CAP)
            .ok_or(PermError::Overscale)?;
        let index: BTreeMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let classes = self.conjugacy_classes()?;
        let k = classes.len();
        if k > CLASS_CAP {
            return Err(PermError::Overscale);
        }
        // class id of every element
        let mut class_of = vec![usize::MAX; elements.len()];
        {
            let mut reps: Vec<(usize, usize)> = Vec::new(); // (element index, class id)
            for (cid, (rep, _)) in classes.iter().enumerate() {
                reps.push((index[rep], cid));
            }
            for (start, cid) in reps {
                let mut frontier = vec![start];
                class_of[start] = cid;
                while let Some(x) = frontier.pop() {
                    for g in &self.gens {
                        let y = elements[x].conjugate_by(g);
                        let yi = index[&y];
                        if class_of[yi] == usize::MAX {
                            class_of[yi] = cid;
                            frontier.push(yi);
                        }
                    }
                }
            }
        }
        // members of each class
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, &c) in class_of.iter().enumerate() {
            members[c].push(i);
        }
        // product table: classes appearing in C_i * C_j (fixed rep from C_j)
        let mut prod = vec![vec![0u32; k]; k];
        for i in 0..k {
            for j in 0..k {
                let rep_j = &elements[members[j][0]];
                let mut mask = 0u32;
                for &x in &members[i] {
                    let y = elements[x].compose(rep_j);
                    mask |= 1 << class_of[index[&y]];
                }
                prod[i][j] = mask;
            }
        }
        let id_class = class_of[index[&Permutation::identity(self.degree)]];
        let closure = |mut set: u32| -> u32 {
            loop {
                let mut next = set;
                for i in 0..k {
                    if set & (1 << i) == 0 {
                        continue;
                    }
                    for j in 0..k {
                        if set & (1 << j) != 0 {
                            next |= prod[i][j];
                        }
                    }
                }
                if next == set {
                    return set;
                }
                set = next;
            }
        };
        let mut closed: BTreeSet<u32> = BTreeSet::new();
        closed.insert(closure(1 << id_class));
        for c in 0..k {
            closed.insert(closure((1 << id_class) | (1 << c)));
        }
        loop {
            let snapshot: Vec<u32> = closed.iter().copied().collect();
            let mut grew = false;
            for (ai, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[ai + 1..] {
                    grew |= closed.insert(closure(a | b));
                }
            }
            if !grew {
                break;
            }
        }
        let mut out = Vec::new();
        for set in closed {
            let mut gens: Vec<Permutation> = Vec::new();
            let mut chain = StabChain::build(self.degree, &gens, &[]);
            for c in 0..k {
                if set & (1 << c) == 0 {
                    continue;
                }
                for &x in &members[c] {
                    if !chain.contains(&elements[x]) {
                        gens.push(elements[x].clone());
                        chain = StabChain::build(self.degree, &gens, &[]);
                    }
                }
            }
            out.push(PermGroup {
                degree: self.degree,
                gens,
                chain,
            });
        }
        out.sort_by(|a, b| a.order().cmp(&b.order()));
        Ok(out)
    }

    /// True iff no proper normal subgroup has index dividing `m`.
    pub fn no_proper_normal_of_index_dividing(&self, m: usize) -> Result<bool, PermError> {
        let order = self.order();
        let m = BigUint::from(m);
        for n in self.normal_subgroups()? {
            let sub_order = n.order();
            if sub_order == order {
                continue; // the group itself
            }
            let index = &order / &sub_order;
            if (&m % &index) == BigUint::from(0u32) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        proptest::collection::vec(0usize..1_000_000, n).prop_map(move |keys| {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&i| (keys[i], i));
            let mut images = vec![0usize; n];
            for (rank, &i) in order.iter().enumerate() {
                images[i] = rank;
            }
            Permutation::from_images(images).unwrap()
        })
    }

    fn brute_force_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::identity(degree));
        loop {
            let mut new = Vec::new();
            for e in &set {
                for g in gens {
                    let f = g.compose(e);
                    if !set.contains(&f) {
                        new.push(f);
                    }
                }
            }
            if new.is_empty() {
                return set.len();
            }
            set.extend(new);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bsgs_order_matches_enumeration(
            a in arb_perm(6),
            b in arb_perm(6),
        ) {
            let group = PermGroup::new(6, alloc::vec![a.clone(), b.clone()]).unwrap();
            let brute = brute_force_order(6, group.generators());
            prop_assert_eq!(group.order(), BigUint::from(brute));
            // membership agrees with enumeration on a few elements
            prop_assert!(group.contains(&a.compose(&b)));
            prop_assert!(group.contains(&a.inverse()));
        }

        #[test]
        fn orbit_stabilizer_product(a in arb_perm(7), b in arb_perm(7)) {
            let group = PermGroup::new(7, alloc::vec![a, b]).unwrap();
            for orbit in group.orbits() {
                let stab = group.point_stabilizer(orbit[0]).unwrap();
                prop_assert_eq!(
                    BigUint::from(orbit.len()) * stab.order(),
                    group.order()
                );
            }
        }

        #[test]
        fn inverse_and_sign_laws(a in arb_perm(8), b in arb_perm(8)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
            prop_assert_eq!(a.conjugate_by(&b).cycle_type(), a.cycle_type());
        }
    }
}
