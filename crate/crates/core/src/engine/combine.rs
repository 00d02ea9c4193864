use super::program::{Combiner, Message, SourceCombine};

fn sort_for_grouping<M>(msgs: &mut [Message<M>]) {
    msgs.sort_by_key(|m| (m.target, m.source, m.seq));
}

/// Reduces each group of messages sharing `(source, target)` to one message.
/// The output is ordered by `(target, source)`.
pub fn apply_source_combiner<M: Clone>(mut msgs: Vec<Message<M>>, rule: &SourceCombine<M>) -> Vec<Message<M>> {
    if matches!(rule, SourceCombine::Disabled) {
        return msgs;
    }
    sort_for_grouping(&mut msgs);
    let mut out: Vec<Message<M>> = Vec::with_capacity(msgs.len());
    for m in msgs {
        match out.last_mut() {
            Some(last) if last.target == m.target && last.source == m.source => match rule {
                SourceCombine::KeepLatest => *last = m,
                SourceCombine::Custom(f) => {
                    last.payload = f(&last.payload, &m.payload);
                    last.seq = m.seq;
                }
                SourceCombine::Disabled => unreachable!(),
            },
            _ => out.push(m),
        }
    }
    out
}

/// Reduces each group of messages sharing a target to exactly one message
/// whose payload is the fold of the group in `(source, seq)` order. The
/// result keeps the source of the first message of the group.
pub fn apply_combiner<M: Clone>(mut msgs: Vec<Message<M>>, combine: Combiner<M>) -> Vec<Message<M>> {
    sort_for_grouping(&mut msgs);
    let mut out: Vec<Message<M>> = Vec::with_capacity(msgs.len());
    for m in msgs {
        match out.last_mut() {
            Some(last) if last.target == m.target => last.payload = combine(&last.payload, &m.payload),
            _ => out.push(m),
        }
    }
    out
}

/// Source-combine, then combine, as configured.
pub(crate) fn reduce_batch<M: Clone>(
    msgs: Vec<Message<M>>,
    source_rule: &SourceCombine<M>,
    combiner: Option<Combiner<M>>,
) -> Vec<Message<M>> {
    let msgs = apply_source_combiner(msgs, source_rule);
    match combiner {
        Some(f) => apply_combiner(msgs, f),
        None => msgs,
    }
}
