//! Randomized maximal bipartite matching by request/grant/accept handshakes.
//!
//! Two programs share the message vocabulary:
//!
//! * [`StandardMatching`] runs the classic three-superstep cycle and relies
//!   on lock-step supersteps (`superstep mod 3` selects the stage).
//! * [`HybridMatching`] is stage-free: every vertex reacts to whatever its
//!   queue holds, so it stays correct when handshakes interleave inside
//!   local phases or under asynchronous messaging.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{Context, Message, VertexProgram};
use crate::error::GraphError;
use crate::graph::{PartitionedGraph, Side, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Request,
    Grant,
    Deny,
    Accept,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftState {
    Unmatched,
    Matched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightState {
    Ungranted,
    Granted,
    Matched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchState {
    Left(LeftState),
    Right(RightState),
}

#[derive(Debug, Clone)]
pub struct MatchValue {
    pub state: MatchState,
    partner: Option<VertexId>,
    /// Left vertex holding this right vertex's outstanding grant.
    granted: Option<VertexId>,
    /// Requesters denied while a grant was outstanding, in arrival order.
    waiting: Vec<VertexId>,
    rng: ChaCha8Rng,
}

impl MatchValue {
    fn new(side: Side, seed: u64, vertex: VertexId) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(vertex as u64);
        let state = match side {
            Side::Left => MatchState::Left(LeftState::Unmatched),
            Side::Right => MatchState::Right(RightState::Ungranted),
        };
        Self {
            state,
            partner: None,
            granted: None,
            waiting: Vec::new(),
            rng,
        }
    }

    /// The matched partner. Set if and only if the vertex is matched.
    pub fn partner(&self) -> Option<VertexId> {
        self.partner
    }

    /// The left vertex currently holding this right vertex's grant.
    pub fn granted_to(&self) -> Option<VertexId> {
        self.granted
    }

    fn pick(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

fn side_of(graph: &PartitionedGraph, vertex: VertexId) -> Side {
    graph.side(vertex).unwrap_or(Side::Left)
}

fn check_bipartite(graph: &PartitionedGraph) -> Result<(), GraphError> {
    if graph.side(0).is_none() && graph.num_vertices() > 0 {
        return Err(GraphError::Config("matching requires side tags".into()));
    }
    for v in 0..graph.num_vertices() as VertexId {
        for e in graph.out_edges(v) {
            if graph.side(v) == graph.side(e.target) {
                return Err(GraphError::NotBipartite {
                    src: graph.original_id(v),
                    dst: graph.original_id(e.target),
                });
            }
        }
    }
    Ok(())
}

/// Lock-step four-stage matching. Stage 1 (left requests) and stage 4
/// (right records acceptance) share a superstep, so one cycle takes three
/// supersteps. Matched right vertices ignore requests, so a left vertex
/// that hears nothing back halts, while one that was only denied stays
/// active and requests again next cycle.
#[derive(Debug, Clone, Copy)]
pub struct StandardMatching {
    pub seed: u64,
}

impl StandardMatching {
    pub fn for_graph(graph: &PartitionedGraph, seed: u64) -> Result<Self, GraphError> {
        check_bipartite(graph)?;
        Ok(Self { seed })
    }
}

impl VertexProgram for StandardMatching {
    type Value = MatchValue;
    type Message = Token;

    fn initial_value(&self, vertex: VertexId, graph: &PartitionedGraph) -> MatchValue {
        MatchValue::new(side_of(graph, vertex), self.seed, vertex)
    }

    fn compute(&self, ctx: &mut Context<'_, Token>, value: &mut MatchValue, messages: &[Message<Token>]) {
        let stage = ctx.superstep() % 3;
        match value.state {
            MatchState::Left(state) => {
                if stage == 0 {
                    if state == LeftState::Unmatched {
                        ctx.send_to_neighbors(Token::Request);
                    }
                } else if stage == 2 && state == LeftState::Unmatched {
                    let grants: Vec<VertexId> = messages
                        .iter()
                        .filter(|m| m.payload == Token::Grant)
                        .map(|m| m.source)
                        .collect();
                    if !grants.is_empty() {
                        let chosen = grants[value.pick(grants.len())];
                        value.state = MatchState::Left(LeftState::Matched);
                        value.partner = Some(chosen);
                        for g in grants {
                            ctx.send(g, if g == chosen { Token::Accept } else { Token::Deny });
                        }
                    } else if messages.iter().any(|m| m.payload == Token::Deny) {
                        // only denials: stay active and request again
                        return;
                    }
                }
            }
            MatchState::Right(state) => {
                if stage == 0 {
                    for m in messages {
                        if value.granted == Some(m.source) {
                            match m.payload {
                                Token::Accept => {
                                    value.state = MatchState::Right(RightState::Matched);
                                    value.partner = Some(m.source);
                                    value.granted = None;
                                }
                                Token::Deny => {
                                    value.state = MatchState::Right(RightState::Ungranted);
                                    value.granted = None;
                                }
                                _ => {}
                            }
                        }
                    }
                } else if stage == 1 && state == RightState::Ungranted {
                    let requests: Vec<VertexId> = messages
                        .iter()
                        .filter(|m| m.payload == Token::Request)
                        .map(|m| m.source)
                        .collect();
                    if !requests.is_empty() {
                        let chosen = requests[value.pick(requests.len())];
                        value.state = MatchState::Right(RightState::Granted);
                        value.granted = Some(chosen);
                        for r in requests {
                            ctx.send(r, if r == chosen { Token::Grant } else { Token::Deny });
                        }
                    }
                }
            }
        }
        ctx.vote_to_halt();
    }
}

/// Asynchronous-safe matching handshake.
///
/// Left vertices request every neighbour when woken with an empty queue.
/// An unmatched left vertex accepts one of the grants it holds, chosen
/// uniformly, and sends a deny to every other neighbour, which declines the
/// remaining grants and withdraws its pending requests. Grants reaching a
/// matched left vertex are declined. A left vertex that is denied without
/// being granted stays active and requests again on its next empty-queue
/// activation.
///
/// Right vertices grant one uniformly chosen candidate while ungranted and
/// deny the rest. While a grant is outstanding, new requesters are denied.
/// Every denied requester is remembered until it withdraws and becomes a
/// candidate again if the outstanding grant is declined. Matched right
/// vertices stay silent.
#[derive(Debug, Clone, Copy)]
pub struct HybridMatching {
    pub seed: u64,
}

impl HybridMatching {
    pub fn for_graph(graph: &PartitionedGraph, seed: u64) -> Result<Self, GraphError> {
        check_bipartite(graph)?;
        Ok(Self { seed })
    }

    fn left(ctx: &mut Context<'_, Token>, value: &mut MatchValue, messages: &[Message<Token>]) {
        if messages.is_empty() {
            if value.state == MatchState::Left(LeftState::Unmatched) {
                ctx.send_to_neighbors(Token::Request);
            }
            ctx.vote_to_halt();
            return;
        }
        let mut denied = false;
        let mut grants = Vec::new();
        for m in messages {
            match m.payload {
                Token::Grant => grants.push(m.source),
                Token::Deny => denied = true,
                Token::Request | Token::Accept => {}
            }
        }
        if !grants.is_empty() {
            if value.state == MatchState::Left(LeftState::Unmatched) {
                let chosen = grants[value.pick(grants.len())];
                value.state = MatchState::Left(LeftState::Matched);
                value.partner = Some(chosen);
                // every other neighbour hears back once: declining a grant
                // or withdrawing a pending request
                for e in ctx.out_edges() {
                    ctx.send(e.target, if e.target == chosen { Token::Accept } else { Token::Deny });
                }
            } else {
                for g in grants {
                    ctx.send(g, Token::Deny);
                }
            }
        }
        if !(denied && value.state == MatchState::Left(LeftState::Unmatched)) {
            ctx.vote_to_halt();
        }
    }

    fn right(ctx: &mut Context<'_, Token>, value: &mut MatchValue, messages: &[Message<Token>]) {
        let mut requests = Vec::new();
        for m in messages {
            match m.payload {
                Token::Accept if value.granted == Some(m.source) => {
                    value.state = MatchState::Right(RightState::Matched);
                    value.partner = Some(m.source);
                    value.granted = None;
                }
                Token::Deny if value.granted == Some(m.source) => {
                    value.state = MatchState::Right(RightState::Ungranted);
                    value.granted = None;
                }
                Token::Deny => {
                    value.waiting.retain(|&w| w != m.source);
                    requests.retain(|&r| r != m.source);
                }
                Token::Request => requests.push(m.source),
                Token::Grant | Token::Accept => {}
            }
        }
        match value.state {
            MatchState::Right(RightState::Matched) => value.waiting.clear(),
            MatchState::Right(RightState::Granted) => {
                for r in requests {
                    if value.granted != Some(r) && !value.waiting.contains(&r) {
                        value.waiting.push(r);
                        ctx.send(r, Token::Deny);
                    }
                }
            }
            MatchState::Right(RightState::Ungranted) => {
                let mut fresh = Vec::new();
                for r in requests {
                    if !value.waiting.contains(&r) {
                        value.waiting.push(r);
                        fresh.push(r);
                    }
                }
                if !value.waiting.is_empty() {
                    let idx = value.pick(value.waiting.len());
                    let chosen = value.waiting.remove(idx);
                    value.state = MatchState::Right(RightState::Granted);
                    value.granted = Some(chosen);
                    ctx.send(chosen, Token::Grant);
                    for r in fresh.into_iter().filter(|&r| r != chosen) {
                        ctx.send(r, Token::Deny);
                    }
                }
            }
            MatchState::Left(_) => unreachable!("right handler called on a left vertex"),
        }
        ctx.vote_to_halt();
    }
}

impl VertexProgram for HybridMatching {
    type Value = MatchValue;
    type Message = Token;

    fn initial_value(&self, vertex: VertexId, graph: &PartitionedGraph) -> MatchValue {
        MatchValue::new(side_of(graph, vertex), self.seed, vertex)
    }

    fn compute(&self, ctx: &mut Context<'_, Token>, value: &mut MatchValue, messages: &[Message<Token>]) {
        match value.state {
            MatchState::Left(_) => Self::left(ctx, value, messages),
            MatchState::Right(_) => Self::right(ctx, value, messages),
        }
    }
}
