//! Exact maximum constant-weight codes by branch-and-bound clique search.
//!
//! The compatibility graph has the weight-k words as vertices and an edge
//! where the Hamming distance is at least 2δ; a maximum code is a maximum
//! clique. The search is Tomita-style: vertices in colex order, a greedy
//! clique as the initial incumbent, and a greedy-coloring bound for pruning.
//! For distance 4 the Johnson bound (taken at weight k and, via the
//! complement bijection, at n−k) doubles as an optimality certificate: once
//! the incumbent meets it the search stops early.

use std::sync::atomic::{AtomicU64, AtomicU8, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::codes::{johnson_upper, ConstantWeightCode};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::subset::{binomial, check_universe, enumerate_level, universe_mask, SubsetWord};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Vertex cap for the exact solver; C(n,k) above this is refused up front
/// rather than thrashing (adjacency is quadratic in the level size).
pub const MAX_SOLVER_VERTICES: usize = 16_384;

/// Search limits. A zero field means unlimited; the default is unlimited.
/// On exhaustion the solver returns its best incumbent, never an error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub millis: u64,
    pub nodes: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { millis: 0, nodes: 0 };

    pub fn from_millis(millis: u64) -> Budget {
        Budget { millis, nodes: 0 }
    }

    pub fn from_nodes(nodes: u64) -> Budget {
        Budget { millis: 0, nodes }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    ProvenOptimal,
    BudgetExhausted,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::ProvenOptimal => "PROVEN_OPTIMAL",
            SolveStatus::BudgetExhausted => "BUDGET_EXHAUSTED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub code: ConstantWeightCode,
    pub status: SolveStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Computes A(n, distance, k) within the budget. See module docs for the
/// search; shortcuts cover the degenerate shapes (single-word levels,
/// distance 2 accepting the whole level, distances no pair can meet).
pub fn exact_max_code(n: u32, distance: u32, k: u32, budget: Budget) -> Result<SolveOutcome> {
    solve(n, distance, k, budget, ExecMode::default(), true)
}

/// As [`exact_max_code`] with an explicit execution mode. Sequential runs
/// are fully deterministic including the witness and node count; parallel
/// runs report the same size and status but may differ in witness.
pub fn exact_max_code_mode(
    n: u32,
    distance: u32,
    k: u32,
    budget: Budget,
    mode: ExecMode,
) -> Result<SolveOutcome> {
    solve(n, distance, k, budget, mode, true)
}

/// Test/bench variant that skips the Johnson certificate, forcing the
/// branch-and-bound to prove optimality by exhausting the tree.
#[doc(hidden)]
pub fn exact_max_code_no_certificate(
    n: u32,
    distance: u32,
    k: u32,
    budget: Budget,
    mode: ExecMode,
) -> Result<SolveOutcome> {
    solve(n, distance, k, budget, mode, false)
}

fn solve(
    n: u32,
    distance: u32,
    k: u32,
    budget: Budget,
    mode: ExecMode,
    use_certificate: bool,
) -> Result<SolveOutcome> {
    let start = Instant::now();
    check_universe(n)?;
    if k > n {
        return Err(Error::WeightOutOfRange {
            weight: k,
            universe: n,
        });
    }
    if distance == 0 || distance % 2 != 0 {
        return Err(Error::InvalidDistance(distance));
    }

    // Two distinct weight-k words over [n] are at distance between 2 and
    // 2·min(k, n−k); above that no pair coexists and the first colex word
    // alone is optimal.
    if distance > 2 * k.min(n - k) {
        let word = SubsetWord::from_mask(n, universe_mask(k)).expect("k <= n <= 64");
        return Ok(SolveOutcome {
            code: ConstantWeightCode::from_verified(n, k, distance, vec![word]),
            status: SolveStatus::ProvenOptimal,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }

    let vertex_count = binomial(n, k) as usize;
    if vertex_count > MAX_SOLVER_VERTICES {
        return Err(Error::InstanceTooLarge {
            vertices: vertex_count,
            limit: MAX_SOLVER_VERTICES,
        });
    }
    let words = enumerate_level(n, k)?;

    // Equal-weight words are always at distance >= 2, so the whole level is
    // a code.
    if distance == 2 {
        return Ok(SolveOutcome {
            code: ConstantWeightCode::from_verified(n, k, 2, words),
            status: SolveStatus::ProvenOptimal,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }

    let adj = build_adjacency(&words, distance, mode);

    // Greedy incumbent over colex order.
    let mut greedy: Vec<u32> = Vec::new();
    let mut candidates = Bits::full(vertex_count);
    while let Some(v) = candidates.first_one() {
        greedy.push(v as u32);
        candidates.and_assign(&adj[v]);
    }

    let certificate = if use_certificate && distance == 4 {
        Some(johnson_upper(n, k)?.min(johnson_upper(n, n - k)?) as usize)
    } else {
        None
    };

    let shared = Shared {
        best: AtomicUsize::new(greedy.len()),
        witness: Mutex::new(greedy.clone()),
        nodes: AtomicU64::new(0),
        stop: AtomicU8::new(RUNNING),
    };
    if certificate == Some(greedy.len()) {
        shared.stop.store(PROVED, Ordering::SeqCst);
    }

    let deadline = (budget.millis > 0).then(|| start + Duration::from_millis(budget.millis));

    if shared.stop.load(Ordering::SeqCst) == RUNNING {
        let mut root = Bits::full(vertex_count);
        let mut order = Vec::new();
        color_sort(&root, &adj, &mut order);

        #[cfg(feature = "parallel")]
        if mode.is_parallel() {
            // Root split: the branch at position i gets the candidates at
            // earlier positions, exactly as the sequential loop would see.
            let mut tasks = Vec::with_capacity(order.len());
            let mut earlier = Bits::zeros(vertex_count);
            for &(v, color) in &order {
                let mut child = Bits::zeros(vertex_count);
                earlier.and_into(&adj[v as usize], &mut child);
                tasks.push((v, color, child));
                earlier.set(v as usize);
            }
            shared.nodes.fetch_add(1, Ordering::Relaxed);
            tasks
                .into_par_iter()
                .rev()
                .for_each(|(v, color, mut child)| {
                    if shared.stop.load(Ordering::SeqCst) != RUNNING {
                        return;
                    }
                    if color as usize <= shared.best.load(Ordering::SeqCst) {
                        return;
                    }
                    let mut ctx = Worker {
                        adj: &adj,
                        shared: &shared,
                        certificate,
                        deadline,
                        node_budget: budget.nodes,
                        ticks: 0,
                    };
                    let mut r = vec![v];
                    if child.is_empty() {
                        ctx.report(&r);
                    } else {
                        expand(&mut ctx, &mut child, &mut r);
                    }
                });
            return Ok(finish(n, k, distance, &words, &shared, start));
        }

        let mut ctx = Worker {
            adj: &adj,
            shared: &shared,
            certificate,
            deadline,
            node_budget: budget.nodes,
            ticks: 0,
        };
        let _ = mode;
        let _ = &mut root;
        let mut r = Vec::new();
        expand_ordered(&mut ctx, &mut root, order, &mut r);
    }

    Ok(finish(n, k, distance, &words, &shared, start))
}

fn finish(
    n: u32,
    k: u32,
    distance: u32,
    words: &[SubsetWord],
    shared: &Shared,
    start: Instant,
) -> SolveOutcome {
    let witness = shared.witness.lock().unwrap();
    let code_words: Vec<SubsetWord> = witness.iter().map(|&i| words[i as usize]).collect();
    let status = match shared.stop.load(Ordering::SeqCst) {
        EXHAUSTED => SolveStatus::BudgetExhausted,
        _ => SolveStatus::ProvenOptimal,
    };
    SolveOutcome {
        code: ConstantWeightCode::from_verified(n, k, distance, code_words),
        status,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    }
}

fn build_adjacency(words: &[SubsetWord], distance: u32, mode: ExecMode) -> Vec<Bits> {
    let row = |v: usize| {
        let mut bits = Bits::zeros(words.len());
        for (u, w) in words.iter().enumerate() {
            if u != v && words[v].hamming_distance(w) >= distance {
                bits.set(u);
            }
        }
        bits
    };
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..words.len()).into_par_iter().map(row).collect();
    }
    let _ = mode;
    (0..words.len()).map(row).collect()
}

const RUNNING: u8 = 0;
const PROVED: u8 = 1;
const EXHAUSTED: u8 = 2;

struct Shared {
    best: AtomicUsize,
    witness: Mutex<Vec<u32>>,
    nodes: AtomicU64,
    stop: AtomicU8,
}

struct Worker<'a> {
    adj: &'a [Bits],
    shared: &'a Shared,
    certificate: Option<usize>,
    deadline: Option<Instant>,
    node_budget: u64,
    ticks: u32,
}

impl Worker<'_> {
    fn stopped(&self) -> bool {
        self.shared.stop.load(Ordering::SeqCst) != RUNNING
    }

    fn halt(&self, state: u8) {
        let _ = self.shared.stop.compare_exchange(
            RUNNING,
            state,
            Ordering::SeqCst,
            Ordering::SeqCst,
        );
    }

    /// Counts one search node and enforces the budget. Wall-clock is only
    /// sampled every 256 nodes to keep the hot path cheap.
    fn on_node(&mut self) {
        let seen = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.node_budget != 0 && seen > self.node_budget {
            self.halt(EXHAUSTED);
            return;
        }
        self.ticks += 1;
        if self.ticks >= 256 {
            self.ticks = 0;
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.halt(EXHAUSTED);
                }
            }
        }
    }

    fn report(&self, clique: &[u32]) {
        let size = clique.len();
        let prev = self.shared.best.fetch_max(size, Ordering::SeqCst);
        if size > prev {
            let mut witness = self.shared.witness.lock().unwrap();
            if size > witness.len() {
                *witness = clique.to_vec();
            }
            if self.certificate == Some(size) {
                self.halt(PROVED);
            }
        }
    }
}

fn expand(ctx: &mut Worker<'_>, p: &mut Bits, r: &mut Vec<u32>) {
    let mut order = Vec::new();
    color_sort(p, ctx.adj, &mut order);
    expand_ordered(ctx, p, order, r);
}

/// Core Tomita loop over a pre-colored candidate set. Branches are taken in
/// descending color order; a branch whose color bound cannot beat the
/// incumbent prunes all remaining ones.
fn expand_ordered(ctx: &mut Worker<'_>, p: &mut Bits, order: Vec<(u32, u32)>, r: &mut Vec<u32>) {
    ctx.on_node();
    for &(v, color) in order.iter().rev() {
        if ctx.stopped() {
            return;
        }
        if r.len() + color as usize <= ctx.shared.best.load(Ordering::SeqCst) {
            return;
        }
        r.push(v);
        let mut child = Bits::zeros(p.capacity());
        p.and_into(&ctx.adj[v as usize], &mut child);
        if child.is_empty() {
            ctx.report(r);
        } else {
            expand(ctx, &mut child, r);
        }
        r.pop();
        p.clear(v as usize);
    }
}

/// Greedy sequential coloring of `p` in colex order. Output is (vertex,
/// color) sorted by color ascending; a clique inside `p` through a vertex
/// of color c has at most c members among vertices of color <= c.
fn color_sort(p: &Bits, adj: &[Bits], out: &mut Vec<(u32, u32)>) {
    out.clear();
    let mut uncolored = p.clone();
    let mut color = 0u32;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first_one() {
            avail.clear(v);
            avail.and_not_assign(&adj[v]);
            uncolored.clear(v);
            out.push((v as u32, color));
        }
    }
}

/// Fixed-capacity bitset sized to the vertex count; just the operations the
/// clique search needs.
#[derive(Clone)]
struct Bits {
    blocks: Vec<u64>,
    capacity: usize,
}

impl Bits {
    fn zeros(capacity: usize) -> Bits {
        Bits {
            blocks: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    fn full(capacity: usize) -> Bits {
        let mut bits = Bits {
            blocks: vec![u64::MAX; capacity.div_ceil(64)],
            capacity,
        };
        let tail = capacity % 64;
        if tail != 0 {
            *bits.blocks.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        bits
    }

    #[inline]
    fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    fn first_one(&self) -> Option<usize> {
        self.blocks
            .iter()
            .position(|&b| b != 0)
            .map(|i| i * 64 + self.blocks[i].trailing_zeros() as usize)
    }

    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    fn and_into(&self, other: &Bits, out: &mut Bits) {
        for ((o, a), b) in out.blocks.iter_mut().zip(&self.blocks).zip(&other.blocks) {
            *o = a & b;
        }
    }
}
