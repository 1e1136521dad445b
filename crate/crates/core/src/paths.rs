//! Vertically constrained lattice paths counting the three-Catalan triangle.
//!
//! A path starts at the origin and uses six steps: two vertical ones
//! (`U`, `D`) and four diagonal ones (`NE1`, `SE1`, `NE2`, `SE2`). It must
//! stay in the quarter plane, open with `NE1`, never take three vertical
//! steps in a row, never go `D` right after `SE2` or `U` right after `NE2`,
//! and obey three height-dependent rules near the floor. The wording of the
//! height rules and of mixed vertical pairs leaves room for interpretation,
//! so every such choice is a flag in [`RuleConfig`]; [`calibrate_rules`]
//! picks the reading that reproduces the triangle.
//!
//! Counting goes through [`count_paths`], a column-by-column dynamic program
//! whose state is the most recent diagonal step plus the (at most two)
//! vertical steps taken since. [`enumerate_paths`] is an independent
//! depth-first walk used to cross-check it on small sizes.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Natural, Result};

/// One of the six step vectors. Declaration order is the lexicographic order
/// used for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    /// `(0, 1)`
    U,
    /// `(0, -1)`
    D,
    /// `(1, 1)`
    NE1,
    /// `(1, -1)`
    SE1,
    /// `(1, 2)`
    NE2,
    /// `(1, -2)`
    SE2,
}

impl Step {
    pub const ALL: [Step; 6] = [Step::U, Step::D, Step::NE1, Step::SE1, Step::NE2, Step::SE2];

    pub fn dx(self) -> i64 {
        match self {
            Step::U | Step::D => 0,
            _ => 1,
        }
    }

    pub fn dy(self) -> i64 {
        match self {
            Step::U | Step::NE1 => 1,
            Step::D | Step::SE1 => -1,
            Step::NE2 => 2,
            Step::SE2 => -2,
        }
    }

    pub fn is_vertical(self) -> bool {
        self.dx() == 0
    }

    pub fn token(self) -> &'static str {
        match self {
            Step::U => "U",
            Step::D => "D",
            Step::NE1 => "NE1",
            Step::SE1 => "SE1",
            Step::NE2 => "NE2",
            Step::SE2 => "SE2",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Step {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Step::ALL.into_iter().find(|st| st.token() == s).ok_or(())
    }
}

/// A finite step sequence starting at the origin. Validity is not enforced
/// by construction; see [`is_valid`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Path {
        Path { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> (i64, i64) {
        self.steps
            .iter()
            .fold((0, 0), |(x, y), s| (x + s.dx(), y + s.dy()))
    }

    /// Every visited lattice point, origin first.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            x += s.dx();
            y += s.dy();
            pts.push((x, y));
        }
        pts
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.token())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(text: &str) -> Result<Path> {
        parse_path(text)
    }
}

/// Parses whitespace-separated step tokens. Validity is not checked.
pub fn parse_path(text: &str) -> Result<Path> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<Step>().map_err(|()| Error::Parse {
                position: i + 1,
                token: tok.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Path::new)
}

/// Which interpretation of each ambiguous path rule is in force.
///
/// The `*_at_departure` flags choose whether a height rule looks at the
/// point the diagonal step leaves (`true`) or the point it reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleConfig {
    /// Floor rule: no `NE2` at height 0.
    pub ground_ne2_at_departure: bool,
    /// Level-one rule: no `D D` right after an `NE1` at height 1.
    pub level_one_at_departure: bool,
    /// Level-two rule: no `D` right after an `SE1` at height 2.
    pub level_two_at_departure: bool,
    /// Forbid `U` immediately followed by `D`.
    pub forbid_up_then_down: bool,
    /// Forbid `D` immediately followed by `U`.
    pub forbid_down_then_up: bool,
    /// Forbid `U U` and `D D`.
    pub forbid_repeated_vertical: bool,
}

impl RuleConfig {
    /// The reading that reproduces the three-Catalan triangle.
    pub const CANONICAL: RuleConfig = RuleConfig {
        ground_ne2_at_departure: true,
        level_one_at_departure: true,
        level_two_at_departure: true,
        forbid_up_then_down: true,
        forbid_down_then_up: true,
        forbid_repeated_vertical: false,
    };

    /// Most literal reading: height rules at departure, no extra rules on
    /// vertical pairs.
    pub const LITERAL: RuleConfig = RuleConfig {
        forbid_up_then_down: false,
        forbid_down_then_up: false,
        ..RuleConfig::CANONICAL
    };

    /// All 64 combinations, in a fixed order.
    pub fn all() -> Vec<RuleConfig> {
        (0u8..64)
            .map(|bits| RuleConfig {
                ground_ne2_at_departure: bits & 1 != 0,
                level_one_at_departure: bits & 2 != 0,
                level_two_at_departure: bits & 4 != 0,
                forbid_up_then_down: bits & 8 != 0,
                forbid_down_then_up: bits & 16 != 0,
                forbid_repeated_vertical: bits & 32 != 0,
            })
            .collect()
    }
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig::CANONICAL
    }
}

impl fmt::Display for RuleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let anchor = |b: bool| if b { "departure" } else { "arrival" };
        write!(
            f,
            "ground-NE2@{} level1@{} level2@{} UD:{} DU:{} UU/DD:{}",
            anchor(self.ground_ne2_at_departure),
            anchor(self.level_one_at_departure),
            anchor(self.level_two_at_departure),
            if self.forbid_up_then_down {
                "forbidden"
            } else {
                "allowed"
            },
            if self.forbid_down_then_up {
                "forbidden"
            } else {
                "allowed"
            },
            if self.forbid_repeated_vertical {
                "forbidden"
            } else {
                "allowed"
            },
        )
    }
}

/// The rule a path breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Constraint {
    /// The path dips below the x-axis.
    Quadrant,
    /// First step is not `NE1`.
    LeadingStep,
    /// Three vertical steps in a row.
    TripleVertical,
    /// `D` right after `SE2`, or `U` right after `NE2`.
    VerticalAfterSteep,
    /// `NE2` from height 0.
    GroundSteepAscent,
    /// `D D` right after an `NE1` anchored at height 1.
    LevelOneDescent,
    /// `D` right after an `SE1` anchored at height 2.
    LevelTwoDescent,
    /// `U D` or `D U` when the reading forbids it.
    MixedVertical,
    /// `U U` or `D D` when the reading forbids it.
    RepeatedVertical,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::Quadrant => "stays in the quarter plane",
            Constraint::LeadingStep => "constraint 1: leading step is NE1",
            Constraint::TripleVertical => "constraint 2: no three consecutive vertical steps",
            Constraint::VerticalAfterSteep => "constraint 3: no D after SE2, no U after NE2",
            Constraint::GroundSteepAscent => "constraint 4 (y=0): no NE2",
            Constraint::LevelOneDescent => "constraint 4 (y=1): no D D after NE1",
            Constraint::LevelTwoDescent => "constraint 4 (y=2): no D after SE1",
            Constraint::MixedVertical => "mixed vertical pair",
            Constraint::RepeatedVertical => "repeated vertical pair",
        })
    }
}

/// Outcome of [`is_valid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validity {
    Valid,
    /// `step` is the 0-based index of the first offending step.
    Invalid {
        constraint: Constraint,
        step: usize,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Verticals taken since the last diagonal step, oldest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Tail {
    len: u8,
    steps: [Option<Step>; 2],
}

impl Tail {
    fn last(&self) -> Option<Step> {
        match self.len {
            0 => None,
            n => self.steps[n as usize - 1],
        }
    }

    fn dy(&self) -> i64 {
        self.steps.iter().flatten().map(|s| s.dy()).sum()
    }

    fn push(mut self, s: Step) -> Tail {
        debug_assert!(self.len < 2);
        self.steps[self.len as usize] = Some(s);
        self.len += 1;
        self
    }

    /// 0..7: `[]`, `U`, `D`, `UU`, `UD`, `DU`, `DD`.
    fn code(&self) -> usize {
        let v = |s: Option<Step>| if s == Some(Step::U) { 0 } else { 1 };
        match self.len {
            0 => 0,
            1 => 1 + v(self.steps[0]),
            _ => 3 + 2 * v(self.steps[0]) + v(self.steps[1]),
        }
    }
}

/// Everything the rules need to know about a prefix besides its endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Context {
    diagonal: Option<Step>,
    tail: Tail,
}

const DIAGONALS: [Step; 4] = [Step::NE1, Step::SE1, Step::NE2, Step::SE2];
const STATES: usize = 4 * 7;

impl Context {
    fn index(&self) -> usize {
        let d = DIAGONALS
            .iter()
            .position(|&s| Some(s) == self.diagonal)
            .expect("indexed contexts follow a diagonal step");
        d * 7 + self.tail.code()
    }

    fn after(self, step: Step) -> Context {
        if step.is_vertical() {
            Context {
                tail: self.tail.push(step),
                ..self
            }
        } else {
            Context {
                diagonal: Some(step),
                tail: Tail::default(),
            }
        }
    }
}

/// Checks whether `step` may extend a prefix ending at height `y` with context `ctx`.
fn admits(
    rules: &RuleConfig,
    ctx: &Context,
    y: i64,
    step: Step,
) -> std::result::Result<(), Constraint> {
    let Some(diagonal) = ctx.diagonal else {
        // only the empty path has no diagonal step
        return if step == Step::NE1 {
            Ok(())
        } else {
            Err(Constraint::LeadingStep)
        };
    };
    if y + step.dy() < 0 {
        return Err(Constraint::Quadrant);
    }
    if step == Step::NE2 {
        let anchor = if rules.ground_ne2_at_departure {
            y
        } else {
            y + 2
        };
        if anchor == 0 {
            return Err(Constraint::GroundSteepAscent);
        }
    }
    if !step.is_vertical() {
        return Ok(());
    }
    if ctx.tail.len >= 2 {
        return Err(Constraint::TripleVertical);
    }
    match ctx.tail.last() {
        None => {
            if (diagonal == Step::SE2 && step == Step::D)
                || (diagonal == Step::NE2 && step == Step::U)
            {
                return Err(Constraint::VerticalAfterSteep);
            }
        }
        Some(prev) if prev == step => {
            if rules.forbid_repeated_vertical {
                return Err(Constraint::RepeatedVertical);
            }
        }
        Some(prev) => {
            let forbidden = match prev {
                Step::U => rules.forbid_up_then_down,
                _ => rules.forbid_down_then_up,
            };
            if forbidden {
                return Err(Constraint::MixedVertical);
            }
        }
    }
    let departure = y - ctx.tail.dy() - diagonal.dy();
    let arrival = departure + diagonal.dy();
    if step == Step::D {
        if diagonal == Step::NE1 && ctx.tail.len == 1 && ctx.tail.last() == Some(Step::D) {
            let anchor = if rules.level_one_at_departure {
                departure
            } else {
                arrival
            };
            if anchor == 1 {
                return Err(Constraint::LevelOneDescent);
            }
        }
        if diagonal == Step::SE1 && ctx.tail.len == 0 {
            let anchor = if rules.level_two_at_departure {
                departure
            } else {
                arrival
            };
            if anchor == 2 {
                return Err(Constraint::LevelTwoDescent);
            }
        }
    }
    Ok(())
}

/// Checks `path` against every rule under `rules`, reporting the first violation.
pub fn is_valid(path: &Path, rules: &RuleConfig) -> Validity {
    let mut ctx = Context::default();
    let mut y = 0;
    for (i, &step) in path.steps.iter().enumerate() {
        if let Err(constraint) = admits(rules, &ctx, y, step) {
            return Validity::Invalid {
                constraint,
                step: i,
            };
        }
        y += step.dy();
        ctx = ctx.after(step);
    }
    Validity::Valid
}

/// Endpoint counts `c(x, y)` for every column `x <= n_max` under `rules`.
///
/// `rows[x][y]` counts valid paths ending at `(x, y)`, `0 <= y <= 3x`.
pub fn count_rows_with(rules: &RuleConfig, n_max: u32) -> Vec<Vec<Natural>> {
    let mut rows = vec![vec![Natural::one()]];
    if n_max == 0 {
        return rows;
    }
    // column 1 holds the single arrival of the mandatory opening NE1
    let origin = Context::default();
    let opening = origin.after(Step::NE1);
    let mut column = vec![vec![Natural::zero(); STATES]; 4];
    column[1][opening.index()] = Natural::one();

    for x in 1..=n_max as usize {
        let height = 3 * x + 1;
        // vertical extensions: tail length 0 feeds 1, 1 feeds 2
        for tail_len in 0..2u8 {
            for y in 0..height {
                for idx in 0..STATES {
                    let ctx = context_of(idx);
                    if ctx.tail.len != tail_len || column[y][idx].is_zero() {
                        continue;
                    }
                    for step in [Step::U, Step::D] {
                        if admits(rules, &ctx, y as i64, step).is_err() {
                            continue;
                        }
                        let ny = (y as i64 + step.dy()) as usize;
                        assert!(ny < height, "height {ny} exceeds 3x at column {x}");
                        let count = column[y][idx].clone();
                        column[ny][ctx.after(step).index()] += count;
                    }
                }
            }
        }
        rows.push(column.iter().map(|states| states.iter().sum()).collect());
        if x == n_max as usize {
            break;
        }

        let next_height = 3 * (x + 1) + 1;
        let mut next = vec![vec![Natural::zero(); STATES]; next_height];
        for (y, states) in column.iter().enumerate() {
            for (idx, count) in states.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                let ctx = context_of(idx);
                for step in DIAGONALS {
                    if admits(rules, &ctx, y as i64, step).is_err() {
                        continue;
                    }
                    let ny = (y as i64 + step.dy()) as usize;
                    assert!(
                        ny < next_height,
                        "height {ny} exceeds 3x at column {}",
                        x + 1
                    );
                    next[ny][ctx.after(step).index()] += count;
                }
            }
        }
        column = next;
    }
    rows
}

fn context_of(idx: usize) -> Context {
    let diagonal = Some(DIAGONALS[idx / 7]);
    let tail = match idx % 7 {
        0 => Tail::default(),
        1 => Tail::default().push(Step::U),
        2 => Tail::default().push(Step::D),
        c => {
            let bits = c - 3;
            let pick = |b: usize| if b == 0 { Step::U } else { Step::D };
            Tail::default().push(pick(bits >> 1)).push(pick(bits & 1))
        }
    };
    Context { diagonal, tail }
}

/// Endpoint counts for columns `0..=n_max` under the canonical rules.
pub fn count_rows(n_max: u32) -> Vec<Vec<Natural>> {
    count_rows_with(&RuleConfig::CANONICAL, n_max)
}

/// Number of valid paths from the origin to `(n, k)` under `rules`.
pub fn count_paths_with(rules: &RuleConfig, n: u32, k: i64) -> Natural {
    if k < 0 || k > 3 * i64::from(n) {
        return Natural::zero();
    }
    count_rows_with(rules, n)
        .pop()
        .and_then(|row| row.into_iter().nth(k as usize))
        .unwrap_or_default()
}

/// Number of valid paths from the origin to `(n, k)` under the canonical rules.
pub fn count_paths(n: u32, k: i64) -> Natural {
    count_paths_with(&RuleConfig::CANONICAL, n, k)
}

/// Default cap on `n` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 6;

/// Depth-first enumeration of valid paths, bounded in `n`.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    pub rules: RuleConfig,
    pub bound: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            rules: RuleConfig::CANONICAL,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl Enumerator {
    fn check_bound(&self, n: u32) -> Result<()> {
        if n > self.bound {
            return Err(Error::Resource {
                what: "exhaustive path enumeration",
                bound: u64::from(self.bound),
                requested: u64::from(n),
            });
        }
        Ok(())
    }

    /// Valid paths to `(n, k)` in lexicographic order, at most `limit` of them.
    pub fn paths(&self, n: u32, k: i64, limit: usize) -> Result<Vec<Path>> {
        self.check_bound(n)?;
        let mut out = Vec::new();
        if limit == 0 {
            return Ok(out);
        }
        let mut steps = Vec::new();
        self.walk(n, k, &mut steps, Context::default(), 0, 0, &mut |steps| {
            out.push(Path::new(steps.to_vec()));
            out.len() < limit
        });
        Ok(out)
    }

    /// Number of valid paths to `(n, k)` by exhaustive walk.
    pub fn count(&self, n: u32, k: i64) -> Result<u64> {
        self.check_bound(n)?;
        let mut total = 0u64;
        let mut steps = Vec::new();
        self.walk(n, k, &mut steps, Context::default(), 0, 0, &mut |_| {
            total += 1;
            true
        });
        Ok(total)
    }

    /// Visits every valid path ending at `(n, k)` in lexicographic order;
    /// `emit` returns `false` to stop. Returns `false` once stopped.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        n: u32,
        k: i64,
        steps: &mut Vec<Step>,
        ctx: Context,
        x: i64,
        y: i64,
        emit: &mut dyn FnMut(&[Step]) -> bool,
    ) -> bool {
        let n = i64::from(n);
        if x == n && y == k && !emit(steps) {
            return false;
        }
        for step in Step::ALL {
            let (nx, ny) = (x + step.dx(), y + step.dy());
            // y moves by at most 3 per remaining column plus 2 in place
            if nx > n || (ny - k).abs() > 3 * (n - nx) + 2 {
                continue;
            }
            if admits(&self.rules, &ctx, y, step).is_err() {
                continue;
            }
            steps.push(step);
            let go_on = self.walk(n as u32, k, steps, ctx.after(step), nx, ny, emit);
            steps.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Endpoint tallies over every valid path with `x <= n_max`,
    /// `tallies[x][y]` for `0 <= y <= 3x`.
    pub fn tally(&self, n_max: u32) -> Result<Vec<Vec<u64>>> {
        self.check_bound(n_max)?;
        let mut tallies: Vec<Vec<u64>> = (0..=n_max as usize).map(|x| vec![0; 3 * x + 1]).collect();
        self.tally_walk(n_max as i64, Context::default(), 0, 0, &mut tallies);
        Ok(tallies)
    }

    fn tally_walk(&self, n_max: i64, ctx: Context, x: i64, y: i64, tallies: &mut [Vec<u64>]) {
        tallies[x as usize][y as usize] += 1;
        for step in Step::ALL {
            let nx = x + step.dx();
            if nx > n_max || admits(&self.rules, &ctx, y, step).is_err() {
                continue;
            }
            self.tally_walk(n_max, ctx.after(step), nx, y + step.dy(), tallies);
        }
    }
}

/// Valid paths to `(n, k)` under the canonical rules, lexicographically,
/// truncated at `limit`. Refuses `n` above [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumerate_paths(n: u32, k: i64, limit: usize) -> Result<Vec<Path>> {
    Enumerator::default().paths(n, k, limit)
}

/// ASCII picture of a path: one text row per height, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendering {
    pub grid: String,
    pub steps: String,
}

impl fmt::Display for Rendering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.steps)?;
        f.write_str(&self.grid)
    }
}

/// Draws `path` on a grid: `o` the origin, `*` visited points, `@` the
/// endpoint, `.` other lattice points. Points below the axis are clipped.
pub fn render(path: &Path) -> Rendering {
    let pts = path.points();
    let x_max = pts.iter().map(|p| p.0).max().unwrap_or(0).max(0);
    let y_max = pts.iter().map(|p| p.1).max().unwrap_or(0).max(0);
    let end = *pts.last().expect("origin is always present");
    let mut grid = String::new();
    for y in (0..=y_max).rev() {
        grid.push_str(&format!("{y:>3} |"));
        for x in 0..=x_max {
            let c = if (x, y) == end {
                '@'
            } else if (x, y) == (0, 0) {
                'o'
            } else if pts.contains(&(x, y)) {
                '*'
            } else {
                '.'
            };
            grid.push(' ');
            grid.push(c);
        }
        grid.push('\n');
    }
    grid.push_str("    +");
    grid.push_str(&"--".repeat(x_max as usize + 1));
    grid.push('\n');
    Rendering {
        grid,
        steps: path.to_string(),
    }
}

/// How one rule reading fared against the triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingOutcome {
    pub rules: RuleConfig,
    /// First `(n, k, expected, counted)` disagreement in row-major order, if any.
    pub first_mismatch: Option<(u32, u32, Natural, Natural)>,
}

impl ReadingOutcome {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Brute-force counts under every reading in [`RuleConfig::all`], compared
/// with the three-Catalan triangle for `n <= n_max`.
pub fn calibration_report(n_max: u32) -> Result<Vec<ReadingOutcome>> {
    if n_max < 4 {
        return Err(Error::Domain(format!(
            "calibration needs n_max >= 4, got {n_max}"
        )));
    }
    let expected: Vec<_> = crate::catalan::triangle_rows(3)?
        .take(n_max as usize + 1)
        .collect();
    RuleConfig::all()
        .into_iter()
        .map(|rules| {
            let enumerator = Enumerator {
                rules,
                bound: n_max,
            };
            let tallies = enumerator.tally(n_max)?;
            let first_mismatch = expected.iter().zip(&tallies).find_map(|(row, counted)| {
                row.entries()
                    .iter()
                    .zip(counted)
                    .enumerate()
                    .find(|(_, (want, &got))| **want != Natural::from(got))
                    .map(|(k, (want, &got))| (row.n(), k as u32, want.clone(), Natural::from(got)))
            });
            Ok(ReadingOutcome {
                rules,
                first_mismatch,
            })
        })
        .collect()
}

/// The unique reading whose brute-force counts reproduce the triangle for
/// `n <= n_max`.
pub fn calibrate_rules(n_max: u32) -> Result<RuleConfig> {
    let survivors: Vec<_> = calibration_report(n_max)?
        .into_iter()
        .filter(ReadingOutcome::matches)
        .collect();
    match survivors.as_slice() {
        [] => Err(Error::NoMatchingReading { n_max }),
        [one] => Ok(one.rules),
        many => Err(Error::AmbiguousReadings {
            n_max,
            count: many.len(),
        }),
    }
}
