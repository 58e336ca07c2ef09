//! Fully materialized finite groups.
//!
//! Every group is stored as its complete multiplication table over element
//! indices `0..n`, with index 0 always the identity. All subgroups, maps and
//! predicates downstream are computed exactly against these tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the order of any group built from a spec.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// A finite group given by its multiplication and inverse tables.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
    prime: Option<u64>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("prime", &self.prime)
            .field("generators", &self.generator_labels())
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult
    }
}

impl Eq for FiniteGroup {}

/// Returns `Some(p)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(n: usize) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            return if m == 1 { Some(d as u64) } else { None };
        }
        d += 1;
    }
    Some(m as u64)
}

impl FiniteGroup {
    /// Builds a group from a trusted table. `mult` is row-major, `n*n` long.
    fn from_parts(
        order: usize,
        mult: Vec<u32>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Self {
        debug_assert_eq!(mult.len(), order * order);
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mult[x * order..(x + 1) * order];
            // a Latin row contains the identity exactly once
            let y = row
                .iter()
                .position(|&v| v == 0)
                .expect("row without identity");
            inv[x] = y as u32;
        }
        let mut generators = generators;
        generators.retain(|&g| g != 0);
        let mut seen = Vec::new();
        generators.retain(|g| {
            if seen.contains(g) {
                false
            } else {
                seen.push(*g);
                true
            }
        });
        FiniteGroup {
            order,
            mult,
            inv,
            generators,
            labels,
            prime: prime_power_base(order),
        }
    }

    /// Builds a group from an arbitrary table, validating the table shape,
    /// the identity, the existence of inverses and that the generators
    /// generate everything. Associativity is checked with [`Self::is_associative`].
    pub fn from_table(
        order: usize,
        mult: Vec<usize>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSpec("empty group".into()));
        }
        if mult.len() != order * order || labels.len() != order {
            return Err(Error::InvalidSpec(
                "table dimensions do not match the order".into(),
            ));
        }
        if let Some(&bad) = mult.iter().chain(generators.iter()).find(|&&v| v >= order) {
            return Err(Error::InvalidIndex { index: bad, order });
        }
        for x in 0..order {
            if mult[x] != x || mult[x * order] != x {
                return Err(Error::InvalidSpec("element 0 is not the identity".into()));
            }
            let mut seen = vec![false; order];
            for &v in &mult[x * order..(x + 1) * order] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidSpec(format!("row {x} is not a permutation")));
                }
            }
        }
        let mult = mult.into_iter().map(|v| v as u32).collect();
        let group = FiniteGroup::from_parts(order, mult, generators, labels);
        if group.span(&group.generators).order() != order {
            return Err(Error::InvalidSpec(
                "generators do not generate the group".into(),
            ));
        }
        if !group.is_associative() {
            return Err(Error::InvalidSpec("table is not associative".into()));
        }
        Ok(group)
    }

    /// The cyclic group of order `n`; element `k` stands for the `k`-th power
    /// of the generator.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_capped(n, DEFAULT_ORDER_CAP)
    }

    pub fn cyclic_capped(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("cyclic group of order 0".into()));
        }
        if n > cap {
            return Err(Error::OrderCapExceeded {
                order: n as u128,
                cap,
            });
        }
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push(((a + b) % n) as u32);
            }
        }
        let labels = (0..n).map(|k| k.to_string()).collect();
        let generators = if n > 1 { vec![1] } else { vec![] };
        Ok(Self::from_parts(n, mult, generators, labels))
    }

    /// Direct product of `factors`. The element with component indices
    /// `(e_1, ..., e_k)` has index `sum e_i * stride_i` with the first factor
    /// most significant.
    pub fn direct_product_many(factors: &[&FiniteGroup], cap: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec(
                "direct product needs at least one factor".into(),
            ));
        }
        let order = checked_order(factors.iter().map(|f| f.order()), cap)?;
        let k = factors.len();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order();
        }
        let digits: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                (0..k)
                    .map(|i| (x / strides[i]) % factors[i].order())
                    .collect()
            })
            .collect();
        let mut mult = Vec::with_capacity(order * order);
        for a in &digits {
            for b in &digits {
                let mut idx = 0;
                for i in 0..k {
                    idx += strides[i] * factors[i].mul(a[i], b[i]);
                }
                mult.push(idx as u32);
            }
        }
        let labels = digits
            .iter()
            .map(|d| {
                let parts: Vec<&str> = (0..k).map(|i| factors[i].label(d[i])).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let generators = (0..k)
            .flat_map(|i| {
                let stride = strides[i];
                factors[i].generators().iter().map(move |&g| g * stride)
            })
            .collect();
        Ok(Self::from_parts(order, mult, generators, labels))
    }

    /// `A x B` together with the embeddings `a -> (a, 1)` and `b -> (1, b)`.
    pub fn direct_product(
        a: &FiniteGroup,
        b: &FiniteGroup,
        cap: usize,
    ) -> Result<(FiniteGroup, Vec<usize>, Vec<usize>)> {
        let g = Self::direct_product_many(&[a, b], cap)?;
        let embed_a = (0..a.order()).map(|x| x * b.order()).collect();
        let embed_b = (0..b.order()).collect();
        Ok((g, embed_a, embed_b))
    }

    /// Semidirect product `base ⋊ actor` where `action[i]` is the automorphism
    /// (as an image table on `base`) by which the `i`-th actor generator acts.
    ///
    /// Elements are pairs `(n, c)` with index `n * |actor| + c` and
    /// `(n1, c1)(n2, c2) = (n1 * theta(c1)(n2), c1 c2)`, where `theta` is the
    /// extension of `action` to a homomorphism `actor -> Aut(base)`.
    pub fn semidirect(
        base: &FiniteGroup,
        actor: &FiniteGroup,
        action: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        if action.len() != actor.generators().len() {
            return Err(Error::BadAction(format!(
                "expected {} generator actions, got {}",
                actor.generators().len(),
                action.len()
            )));
        }
        for table in action {
            if !base.is_automorphism_table(table) {
                return Err(Error::BadAction(
                    "generator action is not an automorphism".into(),
                ));
            }
        }
        let nb = base.order();
        let na = actor.order();
        let order = checked_order([nb, na], cap)?;

        // theta(x * g) = theta(x) o theta(g)
        let mut theta: Vec<Option<Vec<usize>>> = vec![None; na];
        theta[0] = Some((0..nb).collect());
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (gi, &g) in actor.generators().iter().enumerate() {
                let y = actor.mul(x, g);
                let tx = theta[x].as_ref().unwrap();
                let cand: Vec<usize> = action[gi].iter().map(|&n| tx[n]).collect();
                match &theta[y] {
                    Some(existing) if *existing != cand => {
                        return Err(Error::BadAction(
                            "generator actions do not define a homomorphism from the actor".into(),
                        ));
                    }
                    Some(_) => {}
                    None => {
                        theta[y] = Some(cand);
                        queue.push(y);
                    }
                }
            }
        }
        let theta: Vec<Vec<usize>> = theta
            .into_iter()
            .map(|t| t.expect("actor not generated"))
            .collect();

        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            let (n1, c1) = (a / na, a % na);
            let t = &theta[c1];
            for b in 0..order {
                let (n2, c2) = (b / na, b % na);
                let n = base.mul(n1, t[n2]);
                mult.push((n * na + actor.mul(c1, c2)) as u32);
            }
        }
        let labels = (0..order)
            .map(|x| format!("[{}|{}]", base.label(x / na), actor.label(x % na)))
            .collect();
        let generators = base
            .generators()
            .iter()
            .map(|&g| g * na)
            .chain(actor.generators().iter().copied())
            .collect();
        Ok(Self::from_parts(order, mult, generators, labels))
    }

    /// The permutation group of the given degree generated by `gens`
    /// (0-based images). Products compose left to right:
    /// `(x * y)(i) = y(x(i))`.
    pub fn from_permutations(degree: usize, gens: &[Vec<u32>], cap: usize) -> Result<Self> {
        for g in gens {
            if g.len() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator acts on {} points, expected {degree}",
                    g.len()
                )));
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut elems = vec![identity];
        // right[e][i] = e * gens[i]
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elems.len() {
            let mut row = Vec::with_capacity(gens.len());
            for g in gens {
                let prod: Vec<u32> = elems[head].iter().map(|&p| g[p as usize]).collect();
                let next = elems.len();
                let id = *index.entry(prod.clone()).or_insert(next);
                if id == next {
                    if next >= cap {
                        return Err(Error::OrderCapExceeded {
                            order: next as u128 + 1,
                            cap,
                        });
                    }
                    elems.push(prod);
                }
                row.push(id);
            }
            right.push(row);
            head += 1;
        }
        let order = elems.len();
        let gen_idx: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let mult = table_from_right_action(order, gens.len(), |e, i| right[e][i]);
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::from_parts(order, mult, gen_idx, labels))
    }

    /// The quotient `G/N` together with the projection table. Cosets are
    /// numbered in order of their smallest element, so the identity coset is 0.
    pub fn quotient(&self, normal: &Subgroup<'_>) -> (FiniteGroup, Vec<usize>) {
        let n = self.order;
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &m in normal.elements() {
                    coset[self.mul(x, m)] = id;
                }
            }
        }
        let q = reps.len();
        let mut mult = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                mult.push(coset[self.mul(a, b)] as u32);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("{}N", self.label(r)))
            .collect();
        let generators = self.generators.iter().map(|&g| coset[g]).collect();
        (FiniteGroup::from_parts(q, mult, generators, labels), coset)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn generator_labels(&self) -> Vec<&str> {
        self.generators.iter().map(|&g| self.label(g)).collect()
    }

    /// Index of the element carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The prime `p` when the order is `p^k`, `k >= 1`.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn is_p_group(&self) -> bool {
        self.prime.is_some()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: x,
                order: self.order,
            })
        }
    }

    /// Light's associativity test: the table is associative iff
    /// `(x g) y = x (g y)` for every generator `g` and all `x, y`.
    /// Exact because every element is a left-nested product of generators.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        self.generators.iter().all(|&g| {
            (0..n).all(|x| {
                let xg = self.mul(x, g);
                (0..n).all(|y| self.mul(xg, y) == self.mul(x, self.mul(g, y)))
            })
        })
    }

    /// True iff `table` is a bijective endomorphism of this group.
    pub fn is_automorphism_table(&self, table: &[usize]) -> bool {
        if table.len() != self.order || table.iter().any(|&v| v >= self.order) {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &v in table {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.generators.iter().all(|&g| {
            (0..self.order).all(|x| table[self.mul(x, g)] == self.mul(table[x], table[g]))
        })
    }

    /// Extends an assignment of generator images to a homomorphism into
    /// `target`, or `None` when the assignment is inconsistent.
    ///
    /// Walks the right Cayley graph from the identity and checks
    /// `f(x g) = f(x) f(g)` on every edge, which is exactly the homomorphism
    /// condition.
    pub fn extend_homomorphism(
        &self,
        target: &FiniteGroup,
        images: &[usize],
    ) -> Option<Vec<usize>> {
        if images.len() != self.generators.len() || images.iter().any(|&v| v >= target.order()) {
            return None;
        }
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (i, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                let img = target.mul(map[x], images[i]);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Smallest subgroup containing `seed`; its generators are `seed`.
    pub fn closure(&self, seed: &[usize]) -> Result<Subgroup<'_>> {
        for &s in seed {
            self.check_index(s)?;
        }
        Ok(self.span(seed))
    }

    /// As [`Self::closure`] but panics on invalid indices.
    pub fn span(&self, seed: &[usize]) -> Subgroup<'_> {
        let n = self.order;
        let mut members = vec![false; n];
        members[0] = true;
        let mut elems = vec![0usize];
        let mut effective: Vec<usize> = Vec::new();
        for &s in seed {
            if members[s] {
                continue;
            }
            effective.push(s);
            // old elements only need the new generator; new elements need all
            let old = elems.len();
            for i in 0..old {
                let y = self.mul(elems[i], s);
                if !members[y] {
                    members[y] = true;
                    elems.push(y);
                }
            }
            let mut head = old;
            while head < elems.len() {
                let x = elems[head];
                head += 1;
                for &t in &effective {
                    let y = self.mul(x, t);
                    if !members[y] {
                        members[y] = true;
                        elems.push(y);
                    }
                }
            }
        }
        elems.sort_unstable();
        Subgroup {
            group: self,
            elements: elems,
            generators: seed.to_vec(),
            members,
        }
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(self, (0..self.order).collect(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }
}

fn checked_order(orders: impl IntoIterator<Item = usize>, cap: usize) -> Result<usize> {
    let mut total: u128 = 1;
    for o in orders {
        total = total.saturating_mul(o as u128);
    }
    if total > cap as u128 {
        return Err(Error::OrderCapExceeded { order: total, cap });
    }
    Ok(total as usize)
}

/// Fills a multiplication table from right multiplication by generators,
/// using a breadth-first spanning tree: if `b = b' g` then `ab = (ab') g`.
fn table_from_right_action(
    order: usize,
    ngens: usize,
    right: impl Fn(usize, usize) -> usize,
) -> Vec<u32> {
    let mut parent = vec![None; order];
    let mut visited = vec![false; order];
    visited[0] = true;
    let mut bfs = vec![0usize];
    let mut head = 0;
    while head < bfs.len() {
        let x = bfs[head];
        head += 1;
        for i in 0..ngens {
            let y = right(x, i);
            if !visited[y] {
                visited[y] = true;
                parent[y] = Some((x, i));
                bfs.push(y);
            }
        }
    }
    let mut mult = vec![0u32; order * order];
    for a in 0..order {
        mult[a * order] = a as u32;
        for &b in &bfs[1..] {
            let (b0, i) = parent[b].unwrap();
            let ab0 = mult[a * order + b0] as usize;
            mult[a * order + b] = right(ab0, i) as u32;
        }
    }
    mult
}

/// GAP-style cycle notation of a 0-based permutation, printed 1-based.
pub fn cycle_notation(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push((p + 1).to_string());
            p = perm[p] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// A subgroup of a materialized group: a sorted element set plus the
/// generators it was built from.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    elements: Vec<usize>,
    generators: Vec<usize>,
    members: Vec<bool>,
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.elements.len())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.elements == other.elements
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    /// Wraps a sorted element set already known to be a subgroup.
    pub(crate) fn from_sorted(
        group: &'g FiniteGroup,
        elements: Vec<usize>,
        generators: Vec<usize>,
    ) -> Self {
        let mut members = vec![false; group.order()];
        for &e in &elements {
            members[e] = true;
        }
        Subgroup {
            group,
            elements,
            generators,
            members,
        }
    }

    /// Wraps a closed element set, choosing a small generating set greedily.
    pub(crate) fn from_closed_set(group: &'g FiniteGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let generators = small_generating_set(group, &elements);
        let sub = Self::from_sorted(group, elements, generators);
        debug_assert_eq!(group.span(&sub.generators).elements, sub.elements);
        sub
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup<'_>) -> Subgroup<'g> {
        let elems = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_closed_set(self.group, elems)
    }

    /// The subgroup generated by `self` and `other`.
    pub fn join(&self, other: &Subgroup<'_>) -> Subgroup<'g> {
        let seed: Vec<usize> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .copied()
            .collect();
        self.group.span(&seed)
    }

    /// The same subgroup with a greedily reduced generating set.
    pub fn reduced(&self) -> Subgroup<'g> {
        Subgroup::from_closed_set(self.group, self.elements.clone())
    }
}

/// Greedy generating set: scan the elements in ascending order and keep each
/// one not already in the span of those kept so far.
pub fn small_generating_set(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = group.span(&[]);
    for &x in elements {
        if !span.contains(x) {
            gens.push(x);
            span = group.span(&gens);
        }
    }
    gens
}
