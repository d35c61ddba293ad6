//! A deterministic one-way two-tape finite automaton.
//!
//! Tape 1 holds the input between end markers, tape 2 starts as a row of
//! blanks of the same length. Heads only ever move right or stay. A run
//! steps through a partial [`TransitionTable`] until tape 1's head reaches
//! its right marker or no rule applies; in the former case an accepting run
//! ends with a closing sweep that walks tape 2's head onto its own right
//! marker.
//!
//! Traces are delta-encoded: each [`TraceStep`] records state and head
//! positions before and after, plus the cells it wrote. Full
//! [`Configuration`]s are recovered with [`Trace::replay`], which keeps
//! traces of long runs linear in size.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::grammar::{Symbol, Word};

/// A tape square: a binary symbol, a blank or one of the two end markers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TapeCell {
    Zero,
    One,
    Blank,
    LeftMarker,
    RightMarker,
}

impl TapeCell {
    pub fn is_marker(self) -> bool {
        matches!(self, TapeCell::LeftMarker | TapeCell::RightMarker)
    }

    pub fn symbol(self) -> Option<Symbol> {
        match self {
            TapeCell::Zero => Some(Symbol::Zero),
            TapeCell::One => Some(Symbol::One),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TapeCell::Zero => '0',
            TapeCell::One => '1',
            TapeCell::Blank => 'ε',
            TapeCell::LeftMarker => '▷',
            TapeCell::RightMarker => '◁',
        }
    }
}

impl From<Symbol> for TapeCell {
    fn from(symbol: Symbol) -> Self {
        match symbol {
            Symbol::Zero => TapeCell::Zero,
            Symbol::One => TapeCell::One,
        }
    }
}

impl fmt::Display for TapeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// `R`: one cell to the right.
    Right,
    /// `S`: stay in place.
    Stay,
}

impl Move {
    fn offset(self) -> usize {
        match self {
            Move::Right => 1,
            Move::Stay => 0,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Right => "R",
            Move::Stay => "S",
        })
    }
}

/// A bounded tape `▷ c1 .. cm ◁` with a single head.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tape {
    cells: Vec<TapeCell>,
    head: usize,
}

impl Tape {
    /// `▷ input ◁` with the head on the first input cell.
    pub fn with_input(input: &[Symbol]) -> Self {
        Self::framed(input.iter().map(|&s| TapeCell::from(s)), input.len())
    }

    /// `▷ ε^len ◁` with the head on the first cell after the left marker.
    pub fn blank(len: usize) -> Self {
        Self::framed(std::iter::repeat_n(TapeCell::Blank, len), len)
    }

    fn framed(body: impl Iterator<Item = TapeCell>, len: usize) -> Self {
        let mut cells = Vec::with_capacity(len + 2);
        cells.push(TapeCell::LeftMarker);
        cells.extend(body);
        cells.push(TapeCell::RightMarker);
        Tape { cells, head: 1 }
    }

    pub fn cells(&self) -> &[TapeCell] {
        &self.cells
    }

    /// Cells strictly between the markers.
    pub fn body(&self) -> &[TapeCell] {
        &self.cells[1..self.cells.len() - 1]
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn read(&self) -> TapeCell {
        self.cells[self.head]
    }

    /// Index of the right marker.
    pub fn end(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn at_end(&self) -> bool {
        self.head == self.end()
    }

    /// Written cells between the markers, read left to right up to the
    /// first blank.
    pub fn written_prefix(&self) -> Word {
        self.body().iter().map_while(|c| c.symbol()).collect()
    }
}

impl fmt::Display for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cell in &self.cells {
            write!(f, "{cell}")?;
        }
        Ok(())
    }
}

/// Index of a state inside the [`TransitionTable`] that registered it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(u16);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineState {
    pub name: String,
    pub accepting: bool,
}

/// `δ(from, read1, read2) = (to, write1, write2, move1, move2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitionRule {
    pub from: StateId,
    pub read1: TapeCell,
    pub read2: TapeCell,
    pub to: StateId,
    pub write1: TapeCell,
    pub write2: TapeCell,
    pub move1: Move,
    pub move2: Move,
    /// Rule number shown in traces as `(by k)`.
    pub label: Option<u8>,
}

impl TransitionRule {
    pub fn key(&self) -> (StateId, TapeCell, TapeCell) {
        (self.from, self.read1, self.read2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("state name {0:?} is already registered")]
    DuplicateState(String),
    #[error("too many states")]
    TooManyStates,
    #[error("rule refers to a state that is not registered in this table")]
    UnknownState,
    #[error("a rule for ({state}, {read1}, {read2}) already exists")]
    Nondeterministic {
        state: String,
        read1: TapeCell,
        read2: TapeCell,
    },
    #[error("rule on tape {tape} replaces {read} with {write}; markers are fixed")]
    MarkerOverwrite {
        tape: u8,
        read: TapeCell,
        write: TapeCell,
    },
}

/// Registered states plus a partial, deterministic transition map.
///
/// A missing key is not a defect of the table: it is how the machine
/// rejects.
#[derive(Debug, Clone, Default)]
pub struct TransitionTable {
    states: Vec<MachineState>,
    rules: HashMap<(StateId, TapeCell, TapeCell), TransitionRule>,
}

impl TransitionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, name: &str, accepting: bool) -> Result<StateId, TableError> {
        if self.states.iter().any(|s| s.name == name) {
            return Err(TableError::DuplicateState(name.to_owned()));
        }
        let id = u16::try_from(self.states.len()).map_err(|_| TableError::TooManyStates)?;
        self.states.push(MachineState {
            name: name.to_owned(),
            accepting,
        });
        Ok(StateId(id))
    }

    pub fn add_rule(&mut self, rule: TransitionRule) -> Result<(), TableError> {
        if self.get_state(rule.from).is_none() || self.get_state(rule.to).is_none() {
            return Err(TableError::UnknownState);
        }
        for (tape, read, write) in [(1, rule.read1, rule.write1), (2, rule.read2, rule.write2)] {
            if (read.is_marker() || write.is_marker()) && read != write {
                return Err(TableError::MarkerOverwrite { tape, read, write });
            }
        }
        if self.rules.contains_key(&rule.key()) {
            return Err(TableError::Nondeterministic {
                state: self.state(rule.from).name.clone(),
                read1: rule.read1,
                read2: rule.read2,
            });
        }
        self.rules.insert(rule.key(), rule);
        Ok(())
    }

    pub fn lookup(
        &self,
        state: StateId,
        read1: TapeCell,
        read2: TapeCell,
    ) -> Option<&TransitionRule> {
        self.rules.get(&(state, read1, read2))
    }

    fn get_state(&self, id: StateId) -> Option<&MachineState> {
        self.states.get(usize::from(id.0))
    }

    /// # Panics
    ///
    /// If `id` was issued by a different table.
    pub fn state(&self, id: StateId) -> &MachineState {
        self.get_state(id).expect("state id from another table")
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states
            .iter()
            .position(|s| s.name == name)
            .map(|i| StateId(i as u16))
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Rules in a stable order (by state, then by the cells read).
    pub fn rules(&self) -> Vec<&TransitionRule> {
        let mut rules: Vec<_> = self.rules.values().collect();
        rules.sort_by_key(|r| r.key());
        rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Runs with the acceptance flags the states were registered with.
    pub fn run(&self, start: StateId, input: &[Symbol]) -> Result<RunResult, EngineFault> {
        run(self, start, |s| self.state(s).accepting, input)
    }
}

/// The current state, both tapes, and implicitly both head positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: StateId,
    pub tape1: Tape,
    pub tape2: Tape,
}

impl Configuration {
    /// Input on tape 1, an equally long blank tape 2, both heads at index 1.
    pub fn initial(state: StateId, input: &[Symbol]) -> Self {
        Configuration {
            state,
            tape1: Tape::with_input(input),
            tape2: Tape::blank(input.len()),
        }
    }

    pub fn heads(&self) -> (usize, usize) {
        (self.tape1.head, self.tape2.head)
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            state: self.state,
            head1: self.tape1.head,
            head2: self.tape2.head,
        }
    }
}

/// Malformed-table conditions, as opposed to rejections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EngineFault {
    #[error("rule would move the head of tape {tape} past its right marker")]
    MovePastEnd { tape: u8 },
    #[error("rule would overwrite a marker on tape {tape}")]
    MarkerOverwrite { tape: u8 },
    #[error("heads stopped moving and the machine is cycling")]
    Diverged,
}

/// No rule exists for the current `(state, read1, read2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UndefinedTransition {
    /// Index of tape 1's head, counting the left marker as 0.
    pub position: usize,
    pub state: StateId,
    pub read1: TapeCell,
    pub read2: TapeCell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Moved {
        next: Configuration,
        rule: TransitionRule,
    },
    Undefined(UndefinedTransition),
}

/// Applies the unique rule matching `config`, leaving `config` untouched.
pub fn step(table: &TransitionTable, config: &Configuration) -> Result<StepOutcome, EngineFault> {
    let mut next = config.clone();
    match step_in_place(table, &mut next)? {
        Ok((rule, _)) => Ok(StepOutcome::Moved { next, rule }),
        Err(undefined) => Ok(StepOutcome::Undefined(undefined)),
    }
}

/// The rule that fired and the cells it changed.
type Applied = (TransitionRule, [Option<CellWrite>; 2]);

fn step_in_place(
    table: &TransitionTable,
    config: &mut Configuration,
) -> Result<Result<Applied, UndefinedTransition>, EngineFault> {
    let (read1, read2) = (config.tape1.read(), config.tape2.read());
    let Some(&rule) = table.lookup(config.state, read1, read2) else {
        return Ok(Err(UndefinedTransition {
            position: config.tape1.head,
            state: config.state,
            read1,
            read2,
        }));
    };
    let mut writes = [None, None];
    for (i, (tape, write, mv)) in [
        (&config.tape1, rule.write1, rule.move1),
        (&config.tape2, rule.write2, rule.move2),
    ]
    .into_iter()
    .enumerate()
    {
        let tape_no = i as u8 + 1;
        let read = tape.read();
        if read != write && (read.is_marker() || write.is_marker()) {
            return Err(EngineFault::MarkerOverwrite { tape: tape_no });
        }
        if tape.head + mv.offset() > tape.end() {
            return Err(EngineFault::MovePastEnd { tape: tape_no });
        }
        if read != write {
            writes[i] = Some(CellWrite {
                position: tape.head,
                old: read,
                new: write,
            });
        }
    }
    config.state = rule.to;
    let t1 = &mut config.tape1;
    t1.cells[t1.head] = rule.write1;
    t1.head += rule.move1.offset();
    let t2 = &mut config.tape2;
    t2.cells[t2.head] = rule.write2;
    t2.head += rule.move2.offset();
    Ok(Ok((rule, writes)))
}

/// State and head positions at one instant of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Snapshot {
    pub state: StateId,
    pub head1: usize,
    pub head2: usize,
}

impl Snapshot {
    pub fn gap(&self) -> usize {
        self.head1.abs_diff(self.head2)
    }
}

/// A single cell change made by a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellWrite {
    pub position: usize,
    pub old: TapeCell,
    pub new: TapeCell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// A transition-table rule fired.
    Rule,
    /// Closing sweep: tape 2's head moved right, nothing else changed.
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceStep {
    /// Counts from 1.
    pub index: usize,
    pub kind: StepKind,
    pub rule_label: Option<u8>,
    pub before: Snapshot,
    pub after: Snapshot,
    /// Writes on tape 1 and tape 2 that changed a cell.
    pub writes: [Option<CellWrite>; 2],
}

/// The initial configuration plus every step taken from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    initial: Configuration,
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn initial(&self) -> &Configuration {
        &self.initial
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Rule labels in order, sweep steps excluded.
    pub fn rule_labels(&self) -> Vec<Option<u8>> {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Rule)
            .map(|s| s.rule_label)
            .collect()
    }

    pub fn rule_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Rule)
            .count()
    }

    pub fn sweep_steps(&self) -> usize {
        self.steps.len() - self.rule_steps()
    }

    /// Visits the configuration after each step, rebuilt in place.
    pub fn for_each_configuration(&self, mut f: impl FnMut(&TraceStep, &Configuration)) {
        let mut config = self.initial.clone();
        for step in &self.steps {
            apply_delta(&mut config, step);
            f(step, &config);
        }
    }

    /// Full before/after configurations for every step. Quadratic in the
    /// input length; meant for inspection of short runs.
    pub fn replay(&self) -> impl Iterator<Item = (TraceStep, Configuration, Configuration)> + '_ {
        let mut config = self.initial.clone();
        self.steps.iter().map(move |step| {
            let before = config.clone();
            apply_delta(&mut config, step);
            (*step, before, config.clone())
        })
    }
}

fn apply_delta(config: &mut Configuration, step: &TraceStep) {
    for (tape, write) in [&mut config.tape1, &mut config.tape2]
        .into_iter()
        .zip(step.writes)
    {
        if let Some(w) = write {
            tape.cells[w.position] = w.new;
        }
    }
    config.state = step.after.state;
    config.tape1.head = step.after.head1;
    config.tape2.head = step.after.head2;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Tape 1 was consumed in an accepting state and the closing sweep ran.
    AcceptedAtEnd,
    UndefinedTransition(UndefinedTransition),
    NonAcceptingAtEnd(StateId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub verdict: Verdict,
    pub trace: Trace,
    pub final_config: Configuration,
}

impl RunResult {
    pub fn is_accepted(&self) -> bool {
        self.verdict == Verdict::AcceptedAtEnd
    }

    /// Head gap when tape 1's head stopped, before any sweep.
    pub fn pass_end_gap(&self) -> usize {
        self.trace
            .steps
            .iter()
            .rev()
            .find(|s| s.kind == StepKind::Rule)
            .map_or(0, |s| s.after.gap())
    }
}

/// Runs `table` over `input` from `start`.
///
/// Steps until no rule applies (rejection) or tape 1's head sits on its
/// right marker. In the latter case the run accepts only if `accepting`
/// holds for the current state, and then finishes with the closing sweep.
pub fn run(
    table: &TransitionTable,
    start: StateId,
    accepting: impl Fn(StateId) -> bool,
    input: &[Symbol],
) -> Result<RunResult, EngineFault> {
    let initial = Configuration::initial(start, input);
    let mut config = initial.clone();
    let mut steps = Vec::with_capacity(input.len() * 3 / 2 + 1);
    // With both heads parked, only the state and the two scanned cells can
    // change, so a longer stationary streak is a cycle.
    let stall_limit = table.state_count().max(1) * 25;
    let mut stationary = 0usize;

    let verdict = loop {
        if config.tape1.at_end() {
            break if accepting(config.state) {
                Verdict::AcceptedAtEnd
            } else {
                Verdict::NonAcceptingAtEnd(config.state)
            };
        }
        let before = config.snapshot();
        match step_in_place(table, &mut config)? {
            Err(undefined) => break Verdict::UndefinedTransition(undefined),
            Ok((rule, writes)) => {
                let after = config.snapshot();
                if (after.head1, after.head2) == (before.head1, before.head2) {
                    stationary += 1;
                    if stationary > stall_limit {
                        return Err(EngineFault::Diverged);
                    }
                } else {
                    stationary = 0;
                }
                steps.push(TraceStep {
                    index: steps.len() + 1,
                    kind: StepKind::Rule,
                    rule_label: rule.label,
                    before,
                    after,
                    writes,
                });
            }
        }
    };

    if verdict == Verdict::AcceptedAtEnd {
        while !config.tape2.at_end() {
            let before = config.snapshot();
            config.tape2.head += 1;
            steps.push(TraceStep {
                index: steps.len() + 1,
                kind: StepKind::Sweep,
                rule_label: None,
                before,
                after: config.snapshot(),
                writes: [None, None],
            });
        }
    }

    Ok(RunResult {
        verdict,
        trace: Trace { initial, steps },
        final_config: config,
    })
}

/// Largest `|i1 - i2|` over every configuration in `steps`; 0 when empty.
pub fn max_head_gap(steps: &[TraceStep]) -> usize {
    steps
        .iter()
        .flat_map(|s| [s.before.gap(), s.after.gap()])
        .max()
        .unwrap_or(0)
}

/// Renders a run as two-line blocks, one per step:
///
/// ```text
/// T1 ▷[0]1101◁
/// T2 ▷0εεεε◁ (by 1)
/// ```
///
/// The bracketed part of tape 1 is what its head has already passed. Sweep
/// steps end in `(sweep, head 2 at i)`. Blocks are separated by a blank line.
pub fn render_trace(result: &RunResult) -> String {
    let mut blocks = Vec::with_capacity(result.trace.len());
    result.trace.for_each_configuration(|step, config| {
        blocks.push(render_block(step, config));
    });
    if blocks.is_empty() {
        return String::new();
    }
    let mut out = blocks.join("\n\n");
    out.push('\n');
    out
}

fn render_block(step: &TraceStep, config: &Configuration) -> String {
    let cells1 = config.tape1.cells();
    let head1 = config.tape1.head.max(1);
    let consumed: String = cells1[1..head1].iter().map(|c| c.as_char()).collect();
    let unread: String = cells1[head1..cells1.len() - 1]
        .iter()
        .map(|c| c.as_char())
        .collect();
    let tape2: String = config.tape2.body().iter().map(|c| c.as_char()).collect();
    let suffix = match (step.kind, step.rule_label) {
        (StepKind::Sweep, _) => format!(" (sweep, head 2 at {})", config.tape2.head),
        (StepKind::Rule, Some(k)) => format!(" (by {k})"),
        (StepKind::Rule, None) => String::new(),
    };
    format!("T1 ▷[{consumed}]{unread}◁\nT2 ▷{tape2}◁{suffix}")
}
