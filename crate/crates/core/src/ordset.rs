//! Bounded-universe ordered maps.
//!
//! Keys are integers in `[0, universe)`. Operations: insert, remove, get,
//! predecessor (greatest key `<= x`), successor (least key `>= x`), min, max.
//! This is the search contract behind staircase endpoint indexes, the
//! ray-shoot tree's per-node segment sets, and the rightmost-point index.
//!
//! Two interchangeable backends:
//!
//! * [`BitTrieMap`] — a bitwise trie over `ceil(log2 universe)` bits walked
//!   six bits at a stride, so each node is one 64-bit occupancy word plus a
//!   popcount-compressed child array. Deterministic.
//! * [`XFastMap`] — hashed prefix tables per bit level carrying subtree
//!   min/max, plus a doubly linked leaf list. Predecessor binary-searches the
//!   prefix levels.

use alloc::vec::Vec;
use hashbrown::HashMap;

/// Which ordered-map implementation a solver uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Bitwise trie; deterministic.
    Det,
    /// Hashed prefix levels.
    Hash,
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Det
    }
}

/// Backend-dispatched ordered map.
#[derive(Clone, Debug)]
pub enum OrdMap<V> {
    Det(BitTrieMap<V>),
    Hash(XFastMap<V>),
}

impl<V> OrdMap<V> {
    pub fn new(backend: Backend, universe: u32) -> Self {
        match backend {
            Backend::Det => OrdMap::Det(BitTrieMap::new(universe)),
            Backend::Hash => OrdMap::Hash(XFastMap::new(universe)),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            OrdMap::Det(_) => Backend::Det,
            OrdMap::Hash(_) => Backend::Hash,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            OrdMap::Det(m) => m.len(),
            OrdMap::Hash(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&mut self, key: u32, value: V) -> Option<V> {
        match self {
            OrdMap::Det(m) => m.insert(key, value),
            OrdMap::Hash(m) => m.insert(key, value),
        }
    }

    pub fn remove(&mut self, key: u32) -> Option<V> {
        match self {
            OrdMap::Det(m) => m.remove(key),
            OrdMap::Hash(m) => m.remove(key),
        }
    }

    pub fn get(&self, key: u32) -> Option<&V> {
        match self {
            OrdMap::Det(m) => m.get(key),
            OrdMap::Hash(m) => m.get(key),
        }
    }

    pub fn get_mut(&mut self, key: u32) -> Option<&mut V> {
        match self {
            OrdMap::Det(m) => m.get_mut(key),
            OrdMap::Hash(m) => m.get_mut(key),
        }
    }

    pub fn contains(&self, key: u32) -> bool {
        self.get(key).is_some()
    }

    /// Greatest key `<= key`.
    pub fn pred(&self, key: u32) -> Option<(u32, &V)> {
        match self {
            OrdMap::Det(m) => m.pred(key),
            OrdMap::Hash(m) => m.pred(key),
        }
    }

    /// Least key `>= key`.
    pub fn succ(&self, key: u32) -> Option<(u32, &V)> {
        match self {
            OrdMap::Det(m) => m.succ(key),
            OrdMap::Hash(m) => m.succ(key),
        }
    }

    /// Greatest key `< key`.
    pub fn pred_strict(&self, key: u32) -> Option<(u32, &V)> {
        if key == 0 {
            None
        } else {
            self.pred(key - 1)
        }
    }

    /// Least key `> key`.
    pub fn succ_strict(&self, key: u32) -> Option<(u32, &V)> {
        self.succ(key.checked_add(1)?)
    }

    pub fn min(&self) -> Option<(u32, &V)> {
        self.succ(0)
    }

    pub fn max(&self) -> Option<(u32, &V)> {
        self.pred(u32::MAX)
    }

    /// Visits all entries in ascending key order.
    pub fn for_each(&self, mut f: impl FnMut(u32, &V)) {
        let mut cur = self.min();
        while let Some((k, v)) = cur {
            f(k, v);
            cur = self.succ_strict(k);
        }
    }

    pub fn keys(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        self.for_each(|k, _| out.push(k));
        out
    }
}

const STRIDE: u32 = 6;

fn low_bits(d: u32) -> u64 {
    if d >= 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

fn high_bits(d: u32) -> u64 {
    // bits strictly above d
    if d >= 63 {
        0
    } else {
        u64::MAX << (d + 1)
    }
}

#[derive(Clone, Debug)]
enum NodeKind<V> {
    Internal { children: Vec<u32> },
    Leaf { values: Vec<V> },
}

#[derive(Clone, Debug)]
struct Node<V> {
    mask: u64,
    kind: NodeKind<V>,
}

impl<V> Node<V> {
    fn slot(&self, digit: u32) -> usize {
        (self.mask & low_bits(digit)).count_ones() as usize
    }

    fn child(&self, digit: u32) -> u32 {
        match &self.kind {
            NodeKind::Internal { children } => children[self.slot(digit)],
            NodeKind::Leaf { .. } => unreachable!("leaf word has no children"),
        }
    }
}

/// Ordered map over `[0, universe)` backed by a radix-64 bitwise trie.
#[derive(Clone, Debug)]
pub struct BitTrieMap<V> {
    depth: u32,
    nodes: Vec<Node<V>>,
    free: Vec<u32>,
    len: usize,
}

impl<V> BitTrieMap<V> {
    pub fn new(universe: u32) -> Self {
        let bits = 32 - universe.saturating_sub(1).leading_zeros();
        let depth = bits.div_ceil(STRIDE).max(1);
        let root = if depth == 1 {
            Node { mask: 0, kind: NodeKind::Leaf { values: Vec::new() } }
        } else {
            Node { mask: 0, kind: NodeKind::Internal { children: Vec::new() } }
        };
        BitTrieMap { depth, nodes: alloc::vec![root], free: Vec::new(), len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn digit(&self, key: u32, level: u32) -> u32 {
        (key >> (STRIDE * (self.depth - 1 - level))) & 63
    }

    fn alloc(&mut self, node: Node<V>) -> u32 {
        if let Some(i) = self.free.pop() {
            self.nodes[i as usize] = node;
            i
        } else {
            self.nodes.push(node);
            (self.nodes.len() - 1) as u32
        }
    }

    pub fn insert(&mut self, key: u32, value: V) -> Option<V> {
        let mut node = 0usize;
        for level in 0..self.depth - 1 {
            let d = self.digit(key, level);
            if self.nodes[node].mask & (1 << d) == 0 {
                let child = if level == self.depth - 2 {
                    Node { mask: 0, kind: NodeKind::Leaf { values: Vec::new() } }
                } else {
                    Node { mask: 0, kind: NodeKind::Internal { children: Vec::new() } }
                };
                let idx = self.alloc(child);
                let n = &mut self.nodes[node];
                let slot = (n.mask & low_bits(d)).count_ones() as usize;
                n.mask |= 1 << d;
                match &mut n.kind {
                    NodeKind::Internal { children } => children.insert(slot, idx),
                    NodeKind::Leaf { .. } => unreachable!(),
                }
            }
            node = self.nodes[node].child(d) as usize;
        }
        let d = self.digit(key, self.depth - 1);
        let n = &mut self.nodes[node];
        let slot = (n.mask & low_bits(d)).count_ones() as usize;
        match &mut n.kind {
            NodeKind::Leaf { values } => {
                if n.mask & (1 << d) != 0 {
                    Some(core::mem::replace(&mut values[slot], value))
                } else {
                    n.mask |= 1 << d;
                    values.insert(slot, value);
                    self.len += 1;
                    None
                }
            }
            NodeKind::Internal { .. } => unreachable!(),
        }
    }

    pub fn remove(&mut self, key: u32) -> Option<V> {
        let mut path: Vec<(usize, u32)> = Vec::with_capacity(self.depth as usize);
        let mut node = 0usize;
        for level in 0..self.depth - 1 {
            let d = self.digit(key, level);
            if self.nodes[node].mask & (1 << d) == 0 {
                return None;
            }
            path.push((node, d));
            node = self.nodes[node].child(d) as usize;
        }
        let d = self.digit(key, self.depth - 1);
        if self.nodes[node].mask & (1 << d) == 0 {
            return None;
        }
        let n = &mut self.nodes[node];
        let slot = (n.mask & low_bits(d)).count_ones() as usize;
        n.mask &= !(1 << d);
        let out = match &mut n.kind {
            NodeKind::Leaf { values } => values.remove(slot),
            NodeKind::Internal { .. } => unreachable!(),
        };
        self.len -= 1;
        // prune empty nodes bottom-up
        let mut empty = self.nodes[node].mask == 0 && node != 0;
        let mut dead = node as u32;
        while empty {
            let (parent, pd) = path.pop().expect("non-root node has a parent");
            self.free.push(dead);
            let p = &mut self.nodes[parent];
            let slot = (p.mask & low_bits(pd)).count_ones() as usize;
            p.mask &= !(1 << pd);
            match &mut p.kind {
                NodeKind::Internal { children } => {
                    children.remove(slot);
                }
                NodeKind::Leaf { .. } => unreachable!(),
            }
            empty = p.mask == 0 && parent != 0;
            dead = parent as u32;
        }
        Some(out)
    }

    pub fn get(&self, key: u32) -> Option<&V> {
        let mut node = 0usize;
        for level in 0..self.depth - 1 {
            let d = self.digit(key, level);
            if self.nodes[node].mask & (1 << d) == 0 {
                return None;
            }
            node = self.nodes[node].child(d) as usize;
        }
        let d = self.digit(key, self.depth - 1);
        let n = &self.nodes[node];
        if n.mask & (1 << d) == 0 {
            return None;
        }
        match &n.kind {
            NodeKind::Leaf { values } => Some(&values[n.slot(d)]),
            NodeKind::Internal { .. } => unreachable!(),
        }
    }

    pub fn get_mut(&mut self, key: u32) -> Option<&mut V> {
        let mut node = 0usize;
        for level in 0..self.depth - 1 {
            let d = self.digit(key, level);
            if self.nodes[node].mask & (1 << d) == 0 {
                return None;
            }
            node = self.nodes[node].child(d) as usize;
        }
        let d = self.digit(key, self.depth - 1);
        let n = &self.nodes[node];
        if n.mask & (1 << d) == 0 {
            return None;
        }
        let slot = n.slot(d);
        match &mut self.nodes[node].kind {
            NodeKind::Leaf { values } => Some(&mut values[slot]),
            NodeKind::Internal { .. } => unreachable!(),
        }
    }

    /// Key of the largest entry in the subtree rooted at `node`, with the
    /// digits accumulated so far in `prefix`.
    fn descend_extreme(&self, mut node: usize, mut prefix: u32, level: u32, max: bool) -> (u32, &V) {
        for _ in level..self.depth {
            let n = &self.nodes[node];
            debug_assert!(n.mask != 0, "trie nodes are pruned when empty");
            let d = if max { 63 - n.mask.leading_zeros() } else { n.mask.trailing_zeros() };
            prefix = (prefix << STRIDE) | d;
            match &n.kind {
                NodeKind::Leaf { values } => return (prefix, &values[n.slot(d)]),
                NodeKind::Internal { .. } => node = n.child(d) as usize,
            }
        }
        unreachable!()
    }

    pub fn pred(&self, key: u32) -> Option<(u32, &V)> {
        if self.len == 0 {
            return None;
        }
        let mut node = 0usize;
        let mut prefix = 0u32;
        let mut best: Option<(usize, u32, u32, u32)> = None; // node, digit, level, prefix
        for level in 0..self.depth {
            let d = self.digit(key, level);
            let n = &self.nodes[node];
            let below = n.mask & low_bits(d);
            if below != 0 {
                best = Some((node, 63 - below.leading_zeros(), level, prefix));
            }
            if n.mask & (1 << d) == 0 {
                break;
            }
            match &n.kind {
                NodeKind::Leaf { values } => return Some((key, &values[n.slot(d)])),
                NodeKind::Internal { .. } => {
                    node = n.child(d) as usize;
                    prefix = (prefix << STRIDE) | d;
                }
            }
        }
        let (bnode, bd, blevel, bprefix) = best?;
        let n = &self.nodes[bnode];
        let acc = (bprefix << STRIDE) | bd;
        match &n.kind {
            NodeKind::Leaf { values } => Some((acc, &values[n.slot(bd)])),
            NodeKind::Internal { .. } => {
                Some(self.descend_extreme(n.child(bd) as usize, acc, blevel + 1, true))
            }
        }
    }

    pub fn succ(&self, key: u32) -> Option<(u32, &V)> {
        if self.len == 0 {
            return None;
        }
        let mut node = 0usize;
        let mut prefix = 0u32;
        let mut best: Option<(usize, u32, u32, u32)> = None;
        for level in 0..self.depth {
            let d = self.digit(key, level);
            let n = &self.nodes[node];
            let above = n.mask & high_bits(d);
            if above != 0 {
                best = Some((node, above.trailing_zeros(), level, prefix));
            }
            if n.mask & (1 << d) == 0 {
                break;
            }
            match &n.kind {
                NodeKind::Leaf { values } => return Some((key, &values[n.slot(d)])),
                NodeKind::Internal { .. } => {
                    node = n.child(d) as usize;
                    prefix = (prefix << STRIDE) | d;
                }
            }
        }
        let (bnode, bd, blevel, bprefix) = best?;
        let n = &self.nodes[bnode];
        let acc = (bprefix << STRIDE) | bd;
        match &n.kind {
            NodeKind::Leaf { values } => Some((acc, &values[n.slot(bd)])),
            NodeKind::Internal { .. } => {
                Some(self.descend_extreme(n.child(bd) as usize, acc, blevel + 1, false))
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct MinMax {
    min: u32,
    max: u32,
}

#[derive(Clone, Debug)]
struct Leaf<V> {
    prev: Option<u32>,
    next: Option<u32>,
    value: V,
}

/// Ordered map over `[0, universe)` in the x-fast style: one hash table per
/// prefix length holding subtree min/max, and a doubly linked leaf list.
#[derive(Clone, Debug)]
pub struct XFastMap<V> {
    bits: u32,
    levels: Vec<HashMap<u32, MinMax>>,
    leaves: HashMap<u32, Leaf<V>>,
    min: u32,
    max: u32,
}

impl<V> XFastMap<V> {
    pub fn new(universe: u32) -> Self {
        let bits = (32 - universe.saturating_sub(1).leading_zeros()).max(1);
        let levels = (1..bits).map(|_| HashMap::new()).collect();
        XFastMap { bits, levels, leaves: HashMap::new(), min: 0, max: 0 }
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn get(&self, key: u32) -> Option<&V> {
        self.leaves.get(&key).map(|l| &l.value)
    }

    pub fn get_mut(&mut self, key: u32) -> Option<&mut V> {
        self.leaves.get_mut(&key).map(|l| &mut l.value)
    }

    /// Length (in [1, bits-1]) -> prefix of `key`.
    fn prefix(&self, key: u32, length: u32) -> u32 {
        key >> (self.bits - length)
    }

    pub fn insert(&mut self, key: u32, value: V) -> Option<V> {
        if let Some(leaf) = self.leaves.get_mut(&key) {
            return Some(core::mem::replace(&mut leaf.value, value));
        }
        let prev = self.pred_key(key);
        let next = match prev {
            Some(p) => self.leaves[&p].next,
            None => {
                if self.leaves.is_empty() {
                    None
                } else {
                    Some(self.min)
                }
            }
        };
        if let Some(p) = prev {
            self.leaves.get_mut(&p).expect("linked pred exists").next = Some(key);
        }
        if let Some(n) = next {
            self.leaves.get_mut(&n).expect("linked succ exists").prev = Some(key);
        }
        if self.leaves.is_empty() {
            self.min = key;
            self.max = key;
        } else {
            self.min = self.min.min(key);
            self.max = self.max.max(key);
        }
        self.leaves.insert(key, Leaf { prev, next, value });
        for length in 1..self.bits {
            let p = self.prefix(key, length);
            self.levels[length as usize - 1]
                .entry(p)
                .and_modify(|mm| {
                    mm.min = mm.min.min(key);
                    mm.max = mm.max.max(key);
                })
                .or_insert(MinMax { min: key, max: key });
        }
        None
    }

    pub fn remove(&mut self, key: u32) -> Option<V> {
        if !self.leaves.contains_key(&key) {
            return None;
        }
        let (prev, next) = {
            let l = &self.leaves[&key];
            (l.prev, l.next)
        };
        for length in 1..self.bits {
            let p = self.prefix(key, length);
            let table = &mut self.levels[length as usize - 1];
            let mm = table.get_mut(&p).expect("prefix present for stored key");
            if mm.min == key && mm.max == key {
                table.remove(&p);
            } else if mm.min == key {
                mm.min = next.expect("subtree with two keys has a successor");
            } else if mm.max == key {
                mm.max = prev.expect("subtree with two keys has a predecessor");
            }
        }
        let leaf = self.leaves.remove(&key).expect("checked above");
        if let Some(p) = prev {
            self.leaves.get_mut(&p).expect("pred exists").next = next;
        }
        if let Some(n) = next {
            self.leaves.get_mut(&n).expect("succ exists").prev = prev;
        }
        if !self.leaves.is_empty() {
            if self.min == key {
                self.min = next.expect("non-empty map has a new min");
            }
            if self.max == key {
                self.max = prev.expect("non-empty map has a new max");
            }
        }
        Some(leaf.value)
    }

    fn subtree(&self, prefix: u32, length: u32) -> Option<MinMax> {
        if length == 0 {
            if self.leaves.is_empty() {
                None
            } else {
                Some(MinMax { min: self.min, max: self.max })
            }
        } else if length == self.bits {
            if self.leaves.contains_key(&prefix) {
                Some(MinMax { min: prefix, max: prefix })
            } else {
                None
            }
        } else {
            self.levels[length as usize - 1].get(&prefix).copied()
        }
    }

    /// Greatest stored key `<= key`, by binary search over prefix lengths.
    fn pred_key(&self, key: u32) -> Option<u32> {
        if self.leaves.is_empty() || key < self.min {
            return None;
        }
        if key >= self.max {
            return Some(self.max);
        }
        if self.leaves.contains_key(&key) {
            return Some(key);
        }
        // longest present prefix of `key`: length lo present, length hi absent
        let (mut lo, mut hi) = (0u32, self.bits);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.subtree(self.prefix(key, mid), mid).is_some() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let p = if lo == 0 { 0 } else { self.prefix(key, lo) };
        let bit = (key >> (self.bits - lo - 1)) & 1;
        if bit == 1 {
            let left = self.subtree(p << 1, lo + 1).expect("sibling subtree is non-empty");
            Some(left.max)
        } else {
            let right = self.subtree((p << 1) | 1, lo + 1).expect("sibling subtree is non-empty");
            self.leaves[&right.min].prev
        }
    }

    fn succ_key(&self, key: u32) -> Option<u32> {
        if self.leaves.is_empty() || key > self.max {
            return None;
        }
        if key <= self.min {
            return Some(self.min);
        }
        if self.leaves.contains_key(&key) {
            return Some(key);
        }
        let (mut lo, mut hi) = (0u32, self.bits);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.subtree(self.prefix(key, mid), mid).is_some() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let p = if lo == 0 { 0 } else { self.prefix(key, lo) };
        let bit = (key >> (self.bits - lo - 1)) & 1;
        if bit == 0 {
            let right = self.subtree((p << 1) | 1, lo + 1).expect("sibling subtree is non-empty");
            Some(right.min)
        } else {
            let left = self.subtree(p << 1, lo + 1).expect("sibling subtree is non-empty");
            self.leaves[&left.max].next
        }
    }

    pub fn pred(&self, key: u32) -> Option<(u32, &V)> {
        let k = self.pred_key(key)?;
        Some((k, &self.leaves[&k].value))
    }

    pub fn succ(&self, key: u32) -> Option<(u32, &V)> {
        let k = self.succ_key(key)?;
        Some((k, &self.leaves[&k].value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn check_against_btree(backend: Backend, universe: u32, ops: &[(u8, u32)]) {
        let mut m = OrdMap::new(backend, universe);
        let mut b: BTreeMap<u32, u32> = BTreeMap::new();
        for (i, &(op, key)) in ops.iter().enumerate() {
            let key = key % universe;
            match op % 4 {
                0 => {
                    assert_eq!(m.insert(key, i as u32), b.insert(key, i as u32), "insert {key}");
                }
                1 => {
                    assert_eq!(m.remove(key), b.remove(&key), "remove {key}");
                }
                2 => {
                    let want = b.range(..=key).next_back().map(|(k, v)| (*k, v));
                    assert_eq!(m.pred(key), want, "pred {key}");
                }
                _ => {
                    let want = b.range(key..).next().map(|(k, v)| (*k, v));
                    assert_eq!(m.succ(key), want, "succ {key}");
                }
            }
            assert_eq!(m.len(), b.len());
        }
        let keys: Vec<u32> = b.keys().copied().collect();
        assert_eq!(m.keys(), keys);
    }

    proptest! {
        #[test]
        fn bittrie_matches_btreemap(ops in proptest::collection::vec((0u8..4, 0u32..10_000), 1..400)) {
            check_against_btree(Backend::Det, 10_000, &ops);
        }

        #[test]
        fn xfast_matches_btreemap(ops in proptest::collection::vec((0u8..4, 0u32..10_000), 1..400)) {
            check_against_btree(Backend::Hash, 10_000, &ops);
        }
    }

    #[test]
    fn tiny_universes() {
        for backend in [Backend::Det, Backend::Hash] {
            for universe in [1u32, 2, 3, 63, 64, 65, 4096] {
                let mut m = OrdMap::new(backend, universe);
                for k in 0..universe {
                    assert_eq!(m.insert(k, k * 2), None);
                }
                for k in 0..universe {
                    assert_eq!(m.pred(k), Some((k, &(k * 2))));
                    assert_eq!(m.succ(k), Some((k, &(k * 2))));
                }
                assert_eq!(m.min().map(|e| e.0), Some(0));
                assert_eq!(m.max().map(|e| e.0), Some(universe - 1));
                for k in 0..universe {
                    assert_eq!(m.remove(k), Some(k * 2));
                }
                assert!(m.is_empty());
                assert_eq!(m.pred(universe - 1), None);
            }
        }
    }

    #[test]
    fn pred_succ_between_gaps() {
        for backend in [Backend::Det, Backend::Hash] {
            let mut m = OrdMap::new(backend, 1000);
            for k in [5u32, 100, 990] {
                m.insert(k, ());
            }
            assert_eq!(m.pred(4), None);
            assert_eq!(m.pred(5).map(|e| e.0), Some(5));
            assert_eq!(m.pred(99).map(|e| e.0), Some(5));
            assert_eq!(m.pred(500).map(|e| e.0), Some(100));
            assert_eq!(m.succ(991), None);
            assert_eq!(m.succ(101).map(|e| e.0), Some(990));
            assert_eq!(m.succ_strict(5).map(|e| e.0), Some(100));
            assert_eq!(m.pred_strict(100).map(|e| e.0), Some(5));
            assert_eq!(m.pred_strict(0), None);
        }
    }
}
