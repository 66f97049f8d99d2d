use std::collections::{BTreeMap, VecDeque};

use super::{Presentation, PresentationError};
use crate::jsj::GraphOfGroups;
use crate::word::Word;

/// A generator before identification: a local symbol of some vertex group,
/// or the stable letter of an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Slot {
    base: String,
    suffix: String,
}

struct Slots {
    slots: Vec<Slot>,
    parent: Vec<usize>,
}

impl Slots {
    fn add(&mut self, base: &str, suffix: String) -> usize {
        self.slots.push(Slot { base: base.to_string(), suffix });
        self.parent.push(self.parent.len());
        self.slots.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        self.parent[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

type SlotWord = Vec<(usize, i64)>;

fn invert(w: &SlotWord) -> SlotWord {
    w.iter().rev().map(|&(s, e)| (s, -e)).collect()
}

/// Presentation of the fundamental group of a graph of groups.
///
/// Each vertex group contributes its own copy of its generators and
/// relators. Edges of a breadth-first spanning tree (rooted at the first
/// vertex mentioning the least generator of Γ) identify the two images of
/// the edge generator; every other edge and every loop gets a stable letter
/// `t` and the relator `t α t^-1 ω^-1`. Identifications between two single
/// generators are carried out by merging them rather than kept as relators.
/// Generators are listed in lexicographic order; copies that end up with
/// the same name are disambiguated by a vertex or edge suffix.
pub fn gog_presentation(j: &GraphOfGroups) -> Result<Presentation, PresentationError> {
    if j.vertices.is_empty() {
        return Err(PresentationError::EmptyBase);
    }
    if !j.is_base_connected() {
        return Err(PresentationError::DisconnectedBase);
    }

    let mut slots = Slots { slots: Vec::new(), parent: Vec::new() };
    let mut local: Vec<BTreeMap<String, usize>> = Vec::with_capacity(j.vertices.len());
    let mut relators: Vec<SlotWord> = Vec::new();
    for (k, v) in j.vertices.iter().enumerate() {
        let (gens, rels) = v.group.expand();
        let map: BTreeMap<String, usize> = gens.iter().map(|g| (g.clone(), slots.add(g, format!("_{k}")))).collect();
        for r in rels {
            relators.push(r.letters().iter().map(|l| (map[&l.symbol], l.exp)).collect());
        }
        local.push(map);
    }

    let root = j
        .graph
        .vertices()
        .first()
        .and_then(|least| j.vertices.iter().position(|v| v.group.mentions(least.as_str())))
        .unwrap_or(0);
    let tree = spanning_tree(j, root);

    for (idx, e) in j.edges.iter().enumerate() {
        let to_slots = |w: &Word, vertex: usize| -> Result<SlotWord, PresentationError> {
            w.letters()
                .iter()
                .map(|l| {
                    local[vertex]
                        .get(&l.symbol)
                        .map(|&s| (s, l.exp))
                        .ok_or_else(|| PresentationError::UndeclaredGenerator(l.symbol.clone()))
                })
                .collect()
        };
        let alpha = to_slots(&e.source_image, e.source)?;
        let omega = to_slots(&e.target_image, e.target)?;
        if tree[idx] {
            if let ([(a, 1)], [(b, 1)]) = (alpha.as_slice(), omega.as_slice()) {
                slots.union(*a, *b);
            } else {
                relators.push([alpha, invert(&omega)].concat());
            }
        } else {
            let letter = e.stable_letter.clone().unwrap_or_else(|| format!("t{idx}"));
            let t = slots.add(&letter, format!("_t{idx}"));
            relators.push([vec![(t, 1)], alpha, vec![(t, -1)], invert(&omega)].concat());
        }
    }

    let names = resolve_names(&mut slots);
    let mut generators: Vec<String> = names.values().cloned().collect();
    generators.sort();
    let relators = relators
        .into_iter()
        .map(|r| {
            let mut w = Word::new();
            for (s, e) in r {
                let root = slots.find(s);
                w.push(names[&root].clone(), e);
            }
            w.free_reduce()
        })
        .filter(|w| !w.is_empty())
        .collect();
    Presentation::new(generators, relators)
}

/// Tree edges of a breadth-first search from `root`, edges scanned in order.
fn spanning_tree(j: &GraphOfGroups, root: usize) -> Vec<bool> {
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); j.vertices.len()];
    for (idx, e) in j.edges.iter().enumerate() {
        if !e.is_loop() {
            adjacency[e.source].push((e.target, idx));
            adjacency[e.target].push((e.source, idx));
        }
    }
    let mut seen = vec![false; j.vertices.len()];
    let mut tree = vec![false; j.edges.len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(w, idx) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                tree[idx] = true;
                queue.push_back(w);
            }
        }
    }
    tree
}

/// One name per class of merged slots: the base symbol of the class
/// representative, suffixed when several classes share a base symbol.
fn resolve_names(slots: &mut Slots) -> BTreeMap<usize, String> {
    let roots: Vec<usize> = (0..slots.slots.len()).filter(|&s| slots.find(s) == s).collect();
    let mut by_base: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for &r in &roots {
        by_base.entry(slots.slots[r].base.clone()).or_default().push(r);
    }
    let mut names = BTreeMap::new();
    let mut taken: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    for (base, group) in &by_base {
        if group.len() == 1 {
            taken.insert(base.clone());
            names.insert(group[0], base.clone());
        }
    }
    for (base, group) in &by_base {
        if group.len() > 1 {
            for &r in group {
                let mut name = format!("{base}{}", slots.slots[r].suffix);
                while taken.contains(&name) {
                    name.push('_');
                }
                taken.insert(name.clone());
                names.insert(r, name);
            }
        }
    }
    names
}
