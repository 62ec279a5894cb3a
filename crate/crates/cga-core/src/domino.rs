//! Domino systems, bordered corridor tilings, and their compilation into
//! covering games.
//!
//! A corridor instance fixes a word in the top row, `#` in the side columns
//! and an all-`□` bottom row; rows in between are free. The tiler searches
//! row by row (breadth first, so the returned witness has minimal height)
//! and the frontier language of a system is the set of words admitting such
//! a tiling.

use crate::alphabet::{Alphabet, AlphabetRef, SymbolId, BOX, HASH};
use crate::error::{Error, Result};
use crate::game::{DecisionSet, GameGraph, GameState};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

/// Dominoes with horizontal and vertical compatibility relations and the
/// two distinguished border dominoes `#` (sides) and `□` (bottom).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoSystem {
    dominoes: AlphabetRef,
    horizontal: BTreeSet<(SymbolId, SymbolId)>,
    vertical: BTreeSet<(SymbolId, SymbolId)>,
    side: SymbolId,
    bottom: SymbolId,
}

/// A structural defect reported by [`DominoSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominoViolation {
    SideEqualsBottom,
    SideNotNamedHash { name: String },
    BottomNotNamedBox { name: String },
}

impl fmt::Display for DominoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominoViolation::SideEqualsBottom => {
                write!(f, "side and bottom border dominoes must differ")
            }
            DominoViolation::SideNotNamedHash { name } => {
                write!(f, "side border domino must be `#`, found `{name}`")
            }
            DominoViolation::BottomNotNamedBox { name } => {
                write!(f, "bottom border domino must be `□`, found `{name}`")
            }
        }
    }
}

impl DominoSystem {
    /// Builds a system. Relations referencing unknown dominoes are rejected
    /// here; the border-domino conventions are checked by `validate`.
    pub fn new(
        dominoes: AlphabetRef,
        horizontal: impl IntoIterator<Item = (SymbolId, SymbolId)>,
        vertical: impl IntoIterator<Item = (SymbolId, SymbolId)>,
        side: SymbolId,
        bottom: SymbolId,
    ) -> Result<Self> {
        let horizontal: BTreeSet<_> = horizontal.into_iter().collect();
        let vertical: BTreeSet<_> = vertical.into_iter().collect();
        let n = dominoes.len();
        for &(d, e) in horizontal.iter().chain(vertical.iter()) {
            if d >= n || e >= n {
                return Err(Error::InvalidDomino(format!(
                    "compatibility pair ({d}, {e}) references an unknown domino"
                )));
            }
        }
        if side >= n || bottom >= n {
            return Err(Error::InvalidDomino("border domino missing from the set".into()));
        }
        Ok(DominoSystem { dominoes, horizontal, vertical, side, bottom })
    }

    /// Convenience constructor resolving domino names.
    pub fn from_names(
        dominoes: AlphabetRef,
        horizontal: &[(&str, &str)],
        vertical: &[(&str, &str)],
    ) -> Result<Self> {
        let pair = |list: &[(&str, &str)]| -> Result<Vec<(SymbolId, SymbolId)>> {
            list.iter()
                .map(|&(d, e)| Ok((dominoes.id_checked(d)?, dominoes.id_checked(e)?)))
                .collect()
        };
        let side = dominoes.id_checked(HASH)?;
        let bottom = dominoes.id_checked(BOX)?;
        DominoSystem::new(dominoes.clone(), pair(horizontal)?, pair(vertical)?, side, bottom)
    }

    pub fn dominoes(&self) -> &AlphabetRef {
        &self.dominoes
    }

    pub fn side(&self) -> SymbolId {
        self.side
    }

    pub fn bottom(&self) -> SymbolId {
        self.bottom
    }

    pub fn horizontal(&self) -> impl Iterator<Item = (SymbolId, SymbolId)> + '_ {
        self.horizontal.iter().copied()
    }

    pub fn vertical(&self) -> impl Iterator<Item = (SymbolId, SymbolId)> + '_ {
        self.vertical.iter().copied()
    }

    pub fn horiz_ok(&self, d: SymbolId, e: SymbolId) -> bool {
        self.horizontal.contains(&(d, e))
    }

    pub fn vert_ok(&self, d: SymbolId, e: SymbolId) -> bool {
        self.vertical.contains(&(d, e))
    }

    pub fn validate(&self) -> Vec<DominoViolation> {
        let mut out = Vec::new();
        if self.side == self.bottom {
            out.push(DominoViolation::SideEqualsBottom);
        }
        if self.dominoes.name(self.side) != HASH {
            out.push(DominoViolation::SideNotNamedHash {
                name: self.dominoes.name(self.side).into(),
            });
        }
        if self.dominoes.name(self.bottom) != BOX {
            out.push(DominoViolation::BottomNotNamedBox {
                name: self.dominoes.name(self.bottom).into(),
            });
        }
        out
    }

    pub fn require_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Err(Error::InvalidDomino(text.join("; ")))
        }
    }
}

/// A tiling of the corridor `Z(ℓ, m)`: `m + 1` rows of `ℓ + 2` cells each,
/// including the border columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub width: usize,
    pub height: usize,
    pub rows: Vec<Vec<SymbolId>>,
}

impl Tiling {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Re-checks all four constraint families: the fixed top row, the side
    /// columns, the bottom row, and both adjacency relations.
    pub fn revalidate(&self, system: &DominoSystem, top: &[SymbolId]) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidDomino(msg));
        let width = self.width;
        let m = self.height;
        if self.rows.len() != m + 1 || self.rows.iter().any(|r| r.len() != width + 2) {
            return fail("tiling dimensions are inconsistent".into());
        }
        if self.rows[0][1..=width] != *top {
            return fail("top row does not spell the frontier word".into());
        }
        for (y, row) in self.rows.iter().enumerate() {
            if y < m && (row[0] != system.side || row[width + 1] != system.side) {
                return fail(format!("row {y} is missing its side borders"));
            }
            if y == m && row[1..=width].iter().any(|&d| d != system.bottom) {
                return fail("bottom row must be all `□`".into());
            }
            for x in 0..=width {
                if !system.horiz_ok(row[x], row[x + 1]) {
                    return fail(format!("horizontal mismatch at ({x}, {y})"));
                }
            }
        }
        for y in 0..m {
            for x in 0..width + 2 {
                if !system.vert_ok(self.rows[y][x], self.rows[y + 1][x]) {
                    return fail(format!("vertical mismatch at ({x}, {y})"));
                }
            }
        }
        Ok(())
    }
}

/// Whether a full row (borders included) is horizontally consistent.
fn row_consistent(system: &DominoSystem, row: &[SymbolId]) -> bool {
    row.windows(2).all(|w| system.horiz_ok(w[0], w[1]))
}

/// All rows vertically compatible with `above`, with `#` fixed in the
/// border cells. Generated left to right with horizontal pruning.
fn successor_rows(system: &DominoSystem, above: &[SymbolId]) -> Vec<Vec<SymbolId>> {
    let width = above.len() - 2;
    let side = system.side;
    if !system.vert_ok(above[0], side) || !system.vert_ok(above[width + 1], side) {
        return Vec::new();
    }
    let mut rows = Vec::new();
    let mut row = vec![side];
    fn extend(
        system: &DominoSystem,
        above: &[SymbolId],
        width: usize,
        row: &mut Vec<SymbolId>,
        rows: &mut Vec<Vec<SymbolId>>,
    ) {
        let x = row.len();
        if x == width + 1 {
            if system.horiz_ok(row[width], system.side()) {
                let mut done = row.clone();
                done.push(system.side());
                rows.push(done);
            }
            return;
        }
        for d in system.dominoes().ids() {
            if system.vert_ok(above[x], d) && system.horiz_ok(row[x - 1], d) {
                row.push(d);
                extend(system, above, width, row, rows);
                row.pop();
            }
        }
    }
    extend(system, above, width, &mut row, &mut rows);
    rows
}

/// Can `above` (a row with `#` borders) sit directly on the bottom row?
/// The bottom row's corner cells are unconstrained dominoes, searched here.
fn bottom_row_below(system: &DominoSystem, above: &[SymbolId]) -> Option<Vec<SymbolId>> {
    let width = above.len() - 2;
    let b = system.bottom;
    if above[1..=width].iter().any(|&d| !system.vert_ok(d, b)) {
        return None;
    }
    if width >= 2 && !system.horiz_ok(b, b) {
        return None;
    }
    let left = system
        .dominoes()
        .ids()
        .find(|&c| system.vert_ok(above[0], c) && system.horiz_ok(c, b))?;
    let right = system
        .dominoes()
        .ids()
        .find(|&c| system.vert_ok(above[width + 1], c) && system.horiz_ok(b, c))?;
    let mut row = vec![left];
    row.extend(std::iter::repeat_n(b, width));
    row.push(right);
    Some(row)
}

/// Searches for a corridor tiling with `w` in the top row and height
/// `m ≤ max_height`. Breadth-first over rows, so the witness is of minimal
/// height; absence within the bound is a value, not an error.
pub fn corridor_tiling(
    system: &DominoSystem,
    w: &[SymbolId],
    max_height: usize,
) -> Result<Option<Tiling>> {
    system.require_valid()?;
    if w.is_empty() {
        return Err(Error::EmptyFrontierWord);
    }
    let width = w.len();
    // Height zero: the top row is itself the bottom row, with free corners.
    if w.iter().all(|&d| d == system.bottom)
        && w.windows(2).all(|p| system.horiz_ok(p[0], p[1]))
    {
        let left = system.dominoes().ids().find(|&c| system.horiz_ok(c, w[0]));
        let right = system.dominoes().ids().find(|&c| system.horiz_ok(w[width - 1], c));
        if let (Some(left), Some(right)) = (left, right) {
            let mut row = vec![left];
            row.extend_from_slice(w);
            row.push(right);
            return Ok(Some(Tiling { width, height: 0, rows: vec![row] }));
        }
    }
    let mut top = vec![system.side];
    top.extend_from_slice(w);
    top.push(system.side);
    if !row_consistent(system, &top) {
        return Ok(None);
    }
    let mut parents: HashMap<Vec<SymbolId>, Vec<SymbolId>> = HashMap::new();
    let mut depth: HashMap<Vec<SymbolId>, usize> = HashMap::new();
    let mut queue: VecDeque<Vec<SymbolId>> = VecDeque::new();
    depth.insert(top.clone(), 0);
    queue.push_back(top.clone());
    while let Some(row) = queue.pop_front() {
        let y = depth[&row];
        if y + 1 > max_height {
            continue;
        }
        if let Some(bottom) = bottom_row_below(system, &row) {
            // Reconstruct rows from the BFS tree.
            let mut rows = vec![bottom, row.clone()];
            let mut cursor = row;
            while let Some(parent) = parents.get(&cursor) {
                rows.push(parent.clone());
                cursor = parent.clone();
            }
            rows.reverse();
            let height = rows.len() - 1;
            return Ok(Some(Tiling { width, height, rows }));
        }
        if y + 2 > max_height {
            continue;
        }
        for next in successor_rows(system, &row) {
            if !depth.contains_key(&next) {
                depth.insert(next.clone(), y + 1);
                parents.insert(next.clone(), row.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Frontier-language membership, bounded by `max_height`. The bound is an
/// explicit oracle parameter: words tileable only above it are reported as
/// outside the language.
pub fn frontier_membership(
    system: &DominoSystem,
    w: &[SymbolId],
    max_height: usize,
) -> Result<bool> {
    Ok(corridor_tiling(system, w, max_height)?.is_some())
}

/// Default height bound for frontier queries.
pub fn default_max_height(w: &[SymbolId]) -> usize {
    w.len() + 2
}

/// Compiles a domino system into a game covering its frontier language.
///
/// Singleton states carry one domino observed by both players; pair states
/// carry a vertically compatible pair, the first player observing the upper
/// and the second player the lower domino. Transitions follow the
/// horizontal relation componentwise, entry and exit are wired through
/// `#`-compatibility, and only the all-`□` play can reach the final state
/// that forces decision 1.
pub fn compile_domino_game(system: &DominoSystem) -> Result<GameGraph> {
    system.require_valid()?;
    let dominoes = system.dominoes();
    let alphabet: AlphabetRef = if dominoes.contains(HASH) {
        dominoes.clone()
    } else {
        let (merged, _, _) = dominoes.union(&Alphabet::new([HASH])?);
        Arc::new(merged)
    };
    let hash = alphabet.id(HASH).unwrap();
    let side = system.side;

    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    enum Node {
        Single(SymbolId),
        Pair(SymbolId, SymbolId),
    }
    let mut nodes: Vec<Node> = Vec::new();
    for d in dominoes.ids() {
        if d != side {
            nodes.push(Node::Single(d));
        }
    }
    for &(d, b) in &system.vertical {
        nodes.push(Node::Pair(d, b));
    }
    let index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();

    let mut taken: HashSet<String> = HashSet::new();
    let fresh = |base: String, taken: &mut HashSet<String>| {
        let mut name = base;
        while !taken.insert(name.clone()) {
            name.push('\'');
        }
        name
    };
    let mut states =
        vec![GameState { name: fresh("v0".into(), &mut taken), obs1: hash, obs2: hash }];
    for node in &nodes {
        let (base, obs1, obs2) = match *node {
            Node::Single(d) => (dominoes.name(d).to_string(), d, d),
            Node::Pair(d, b) => {
                (format!("{}|{}", dominoes.name(d), dominoes.name(b)), d, b)
            }
        };
        states.push(GameState { name: fresh(base, &mut taken), obs1, obs2 });
    }
    let z = states.len();
    states.push(GameState { name: fresh("z".into(), &mut taken), obs1: hash, obs2: hash });
    let zhat = states.len();
    states.push(GameState { name: fresh("zhat".into(), &mut taken), obs1: hash, obs2: hash });

    let id_of = |n: Node| index[&n] + 1;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for node in &nodes {
        match *node {
            Node::Single(d) => {
                if system.horiz_ok(side, d) {
                    edges.insert((0, id_of(Node::Single(d))));
                }
                if system.horiz_ok(d, side) {
                    edges.insert((id_of(Node::Single(d)), z));
                }
                for e in dominoes.ids() {
                    if e != side && system.horiz_ok(d, e) {
                        edges.insert((id_of(Node::Single(d)), id_of(Node::Single(e))));
                    }
                }
            }
            Node::Pair(d, b) => {
                let here = id_of(Node::Pair(d, b));
                if system.horiz_ok(side, d) && system.horiz_ok(side, b) {
                    edges.insert((0, here));
                }
                if system.horiz_ok(d, side) && system.horiz_ok(b, side) {
                    edges.insert((here, z));
                }
                for &(d2, b2) in &system.vertical {
                    if system.horiz_ok(d, d2) && system.horiz_ok(b, b2) {
                        edges.insert((here, id_of(Node::Pair(d2, b2))));
                    }
                }
            }
        }
    }
    edges.insert((id_of(Node::Single(system.bottom)), zhat));

    let game = GameGraph::new(
        alphabet.clone(),
        states,
        0,
        edges,
        [(z, DecisionSet::BOTH), (zhat, DecisionSet::ONE)],
    )?;
    Ok(prune_to_plays(&game))
}

/// Drops states that lie on no play. State names and observations survive.
fn prune_to_plays(game: &GameGraph) -> GameGraph {
    let mut reach: BTreeSet<usize> = [game.initial()].into();
    let mut queue = vec![game.initial()];
    while let Some(p) = queue.pop() {
        for &q in game.successors(p) {
            if reach.insert(q) {
                queue.push(q);
            }
        }
    }
    let mut live: BTreeSet<usize> = game.final_states().collect();
    let mut queue: Vec<usize> = live.iter().copied().collect();
    while let Some(q) = queue.pop() {
        for (p, q1) in game.edges() {
            if q1 == q && live.insert(p) {
                queue.push(p);
            }
        }
    }
    let keep: Vec<usize> = (0..game.state_count())
        .filter(|&q| q == game.initial() || (reach.contains(&q) && live.contains(&q)))
        .collect();
    let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let states: Vec<GameState> = keep.iter().map(|&q| game.state(q).clone()).collect();
    let edges: Vec<(usize, usize)> = game
        .edges()
        .filter(|(p, q)| remap.contains_key(p) && remap.contains_key(q))
        .map(|(p, q)| (remap[&p], remap[&q]))
        .collect();
    let admissible: BTreeMap<usize, DecisionSet> = game
        .admissible_entries()
        .filter(|(q, _)| remap.contains_key(q))
        .map(|(q, d)| (remap[&q], d))
        .collect();
    GameGraph::new(
        game.alphabet().clone(),
        states,
        remap[&game.initial()],
        edges,
        admissible,
    )
    .expect("pruning preserves structural integrity")
}
