//! k-nets of lines: verification, Latin squares, completion from two line
//! classes, perspectivities between polygons, and discovery of parallel
//! classes in a point set.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::exact_cover::exact_covers;
use crate::geom::{self, det3, incident, join, meet, GeomError, ProjLine, ProjPoint};
use crate::latin::{self, LatinError, LatinSquare, Permutation};
use crate::scalar::{NumberField, Scalar};

/// Largest polygon size for which all permutations are searched by default.
pub const MAX_PERSPECTIVITY_ORDER: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error("a line class is empty")]
    EmptyClass,
    #[error("line {index} repeats inside its class")]
    DuplicateLine { index: usize },
    #[error("configuration mixes number fields")]
    FieldMismatch,
    #[error("configuration has no line classes")]
    NoClasses,
    #[error("not a net: {0}")]
    NotANet(String),
    #[error("the two base classes do not meet in d² distinct points")]
    BadBasePoints,
    #[error("fiber of symbol {symbol} in square {square} has fewer than two distinct points")]
    DegenerateFiber { square: usize, symbol: usize },
    #[error("invalid Latin squares for completion: {0}")]
    InvalidSquares(String),
    #[error("completed configuration fails verification: {0}")]
    CompletionInvalid(String),
    #[error("line {a} of the first polygon equals line {b} of the second")]
    SharedLine { a: usize, b: usize },
    #[error("polygons of sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("polygon size {0} exceeds the permutation search limit")]
    OrderTooLarge(usize),
    #[error("degenerate data: {0}")]
    DegenerateData(String),
    #[error("line {line} contains {count} of the points, more than {d}")]
    TooManyOnALine { line: ProjLine, count: usize, d: usize },
    #[error("expected {expected} points, got {found}")]
    WrongPointCount { expected: usize, found: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
}

/// An ordered set of pairwise distinct lines (one `A_i` of a net).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineClass {
    lines: Vec<ProjLine>,
}

impl LineClass {
    pub fn new(lines: Vec<ProjLine>) -> Result<Self, NetError> {
        let first = lines.first().ok_or(NetError::EmptyClass)?;
        if lines.iter().any(|l| l.field() != first.field()) {
            return Err(NetError::FieldMismatch);
        }
        let mut seen = HashSet::new();
        for (index, l) in lines.iter().enumerate() {
            if !seen.insert(l) {
                return Err(NetError::DuplicateLine { index });
            }
        }
        Ok(LineClass { lines })
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn field(&self) -> &NumberField {
        self.lines[0].field()
    }

    /// Same lines in the deterministic coordinate order.
    pub fn sorted(&self) -> LineClass {
        let mut lines = self.lines.clone();
        lines.sort();
        LineClass { lines }
    }

    /// All lines pass through one point.
    pub fn is_concurrent(&self) -> Result<bool, NetError> {
        Ok(geom::concurrent(&self.lines)?)
    }

    /// Some three lines of the class pass through one point.
    pub fn has_concurrent_triple(&self) -> Result<bool, NetError> {
        for (a, b, c) in self.lines.iter().tuple_combinations() {
            if det3(a.coords(), b.coords(), c.coords())?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `k` line classes and a point set; the candidate `(A₁, …, A_k, X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KNetConfig {
    field: NumberField,
    classes: Vec<LineClass>,
    points: Vec<ProjPoint>,
}

impl KNetConfig {
    /// Checks only that everything lives in one field; the net conditions
    /// are checked by [`verify_net`].
    pub fn new(classes: Vec<LineClass>, points: Vec<ProjPoint>) -> Result<Self, NetError> {
        let field = classes.first().ok_or(NetError::NoClasses)?.field().clone();
        if classes.iter().any(|c| c.field() != &field) || points.iter().any(|p| p.field() != &field) {
            return Err(NetError::FieldMismatch);
        }
        Ok(KNetConfig { field, classes, points })
    }

    /// Points are taken to be all distinct meets of lines from different
    /// classes, in order of discovery (class pairs, then line pairs).
    pub fn from_classes(classes: Vec<LineClass>) -> Result<Self, NetError> {
        let mut seen = HashSet::new();
        let mut points = vec![];
        for (a, b) in classes.iter().tuple_combinations() {
            for l in a.lines() {
                for m in b.lines() {
                    if l == m {
                        continue;
                    }
                    let p = meet(l, m)?;
                    if seen.insert(p.clone()) {
                        points.push(p);
                    }
                }
            }
        }
        KNetConfig::new(classes, points)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn classes(&self) -> &[LineClass] {
        &self.classes
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Common class size, if all classes have the same size.
    pub fn degree(&self) -> Option<usize> {
        let d = self.classes[0].len();
        self.classes.iter().all(|c| c.len() == d).then_some(d)
    }

    pub fn lines(&self) -> impl Iterator<Item = &ProjLine> {
        self.classes.iter().flat_map(|c| c.lines.iter())
    }

    pub fn with_points(&self, points: Vec<ProjPoint>) -> Result<Self, NetError> {
        KNetConfig::new(self.classes.clone(), points)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    EqualClassSizes,
    DistinctPoints,
    PointCount,
    DisjointClasses,
    MeetsArePoints,
    OneLinePerClass,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::EqualClassSizes => "equal class sizes",
            Condition::DistinctPoints => "points pairwise distinct",
            Condition::PointCount => "|X| = d^2",
            Condition::DisjointClasses => "classes pairwise disjoint",
            Condition::MeetsArePoints => "cross-class meets lie in X",
            Condition::OneLinePerClass => "one line of each class per point",
        })
    }
}

/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    ClassSize { class: usize, size: usize, expected: usize },
    DuplicatePoint { first: usize, second: usize },
    PointCount { expected: usize, found: usize },
    SharedLine { class_a: usize, line_a: usize, class_b: usize, line_b: usize },
    MissingMeet { class_a: usize, line_a: usize, class_b: usize, line_b: usize, point: ProjPoint },
    Incidence { point: usize, class: usize, count: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ClassSize { class, size, expected } => {
                write!(f, "class {class} has {size} lines, expected {expected}")
            }
            Witness::DuplicatePoint { first, second } => write!(f, "points {first} and {second} coincide"),
            Witness::PointCount { expected, found } => write!(f, "{found} points, expected {expected}"),
            Witness::SharedLine { class_a, line_a, class_b, line_b } => {
                write!(f, "line {line_a} of class {class_a} equals line {line_b} of class {class_b}")
            }
            Witness::MissingMeet { class_a, line_a, class_b, line_b, point } => write!(
                f,
                "meet {point} of line {line_a} (class {class_a}) and line {line_b} (class {class_b}) is not in X"
            ),
            Witness::Incidence { point, class, count } => {
                write!(f, "point {point} lies on {count} lines of class {class}")
            }
        }
    }
}

/// Outcome of one condition; it passed iff there are no witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub condition: Condition,
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    pub degree: Option<usize>,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, condition: Condition) -> &CheckOutcome {
        self.checks
            .iter()
            .find(|c| c.condition == condition)
            .expect("every condition is checked")
    }

    pub fn failed_conditions(&self) -> Vec<Condition> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.condition).collect()
    }

    fn summary(&self) -> String {
        self.failed_conditions().iter().map(|c| c.to_string()).join("; ")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(d) => writeln!(f, "k = {}, d = {d}", self.k)?,
            None => writeln!(f, "k = {}, d undefined", self.k)?,
        }
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  {status} {}", c.condition)?;
            for w in c.witnesses.iter().take(8) {
                writeln!(f, "       {w}")?;
            }
            if c.witnesses.len() > 8 {
                writeln!(f, "       ... {} more", c.witnesses.len() - 8)?;
            }
        }
        Ok(())
    }
}

/// Checks every net condition and reports witnesses instead of failing.
pub fn verify_net(config: &KNetConfig) -> Result<VerificationReport, NetError> {
    let classes = &config.classes;
    let points = &config.points;
    let d = classes[0].len();

    let sizes = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() != d)
        .map(|(class, c)| Witness::ClassSize { class, size: c.len(), expected: d })
        .collect();

    let mut index: HashMap<&ProjPoint, usize> = HashMap::new();
    let mut duplicates = vec![];
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = index.get(p) {
            duplicates.push(Witness::DuplicatePoint { first, second: i });
        } else {
            index.insert(p, i);
        }
    }

    let count = if points.len() == d * d {
        vec![]
    } else {
        vec![Witness::PointCount { expected: d * d, found: points.len() }]
    };

    let mut shared = vec![];
    let mut missing = vec![];
    for ((class_a, a), (class_b, b)) in classes.iter().enumerate().tuple_combinations() {
        for (line_a, l) in a.lines().iter().enumerate() {
            for (line_b, m) in b.lines().iter().enumerate() {
                if l == m {
                    shared.push(Witness::SharedLine { class_a, line_a, class_b, line_b });
                    continue;
                }
                let point = meet(l, m)?;
                if !index.contains_key(&point) {
                    missing.push(Witness::MissingMeet { class_a, line_a, class_b, line_b, point });
                }
            }
        }
    }

    let mut incidence = vec![];
    for (pi, p) in points.iter().enumerate() {
        for (class, c) in classes.iter().enumerate() {
            let mut n = 0;
            for l in c.lines() {
                if incident(p, l)? {
                    n += 1;
                }
            }
            if n != 1 {
                incidence.push(Witness::Incidence { point: pi, class, count: n });
            }
        }
    }

    let checks = vec![
        CheckOutcome { condition: Condition::EqualClassSizes, witnesses: sizes },
        CheckOutcome { condition: Condition::DistinctPoints, witnesses: duplicates },
        CheckOutcome { condition: Condition::PointCount, witnesses: count },
        CheckOutcome { condition: Condition::DisjointClasses, witnesses: shared },
        CheckOutcome { condition: Condition::MeetsArePoints, witnesses: missing },
        CheckOutcome { condition: Condition::OneLinePerClass, witnesses: incidence },
    ];
    Ok(VerificationReport { k: classes.len(), degree: config.degree(), checks })
}

fn require_net(config: &KNetConfig) -> Result<(), NetError> {
    let report = verify_net(config)?;
    if report.passed() {
        Ok(())
    } else {
        Err(NetError::NotANet(report.summary()))
    }
}

/// A net whose classes `A₃, …, A_k` are labeled so that `squares[m - 3]`
/// satisfies `M[i][j] = n ⟺ l₁ᵢ, l₂ⱼ, l_{m,n}` concurrent, with first row
/// `(1, …, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledNet {
    pub net: KNetConfig,
    pub squares: Vec<LatinSquare>,
}

/// Keeps `A₁` and `A₂` in their given order and relabels the other classes.
pub fn label_net(config: &KNetConfig) -> Result<LabeledNet, NetError> {
    require_net(config)?;
    let classes = &config.classes;
    let d = classes[0].len();
    let grid: Vec<Vec<ProjPoint>> = classes[0]
        .lines()
        .iter()
        .map(|l| classes[1].lines().iter().map(|m| meet(l, m)).collect())
        .collect::<Result<_, _>>()?;
    let through = |class: &LineClass, p: &ProjPoint| -> Result<usize, NetError> {
        for (idx, l) in class.lines().iter().enumerate() {
            if incident(p, l)? {
                return Ok(idx);
            }
        }
        unreachable!("verified net has a line of each class through every point")
    };
    let mut relabeled = vec![classes[0].clone(), classes[1].clone()];
    let mut squares = vec![];
    for class in &classes[2..] {
        let order: Vec<usize> = grid[0].iter().map(|p| through(class, p)).collect::<Result<_, _>>()?;
        let lines: Vec<ProjLine> = order.iter().map(|&i| class.lines()[i].clone()).collect();
        let relabel = LineClass::new(lines)?;
        let mut cells = vec![vec![0; d]; d];
        for (i, row) in grid.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                cells[i][j] = through(&relabel, p)? + 1;
            }
        }
        squares.push(LatinSquare::new(cells)?);
        relabeled.push(relabel);
    }
    Ok(LabeledNet {
        net: config.with_classes(relabeled)?,
        squares,
    })
}

impl KNetConfig {
    fn with_classes(&self, classes: Vec<LineClass>) -> Result<Self, NetError> {
        KNetConfig::new(classes, self.points.clone())
    }
}

/// Sorts `A₁`, `A₂` by coordinates, then labels as in [`label_net`].
pub fn canonical_labeling(config: &KNetConfig) -> Result<LabeledNet, NetError> {
    let mut classes = config.classes.clone();
    if classes.len() >= 2 {
        classes[0] = classes[0].sorted();
        classes[1] = classes[1].sorted();
    }
    label_net(&config.with_classes(classes)?)
}

/// The `k − 2` Latin squares `M₃, …, M_k` of a net under the canonical
/// labeling.
pub fn derive_latin_squares(config: &KNetConfig) -> Result<Vec<LatinSquare>, NetError> {
    Ok(canonical_labeling(config)?.squares)
}

/// Points that should have been collinear, with a nonzero determinant
/// `det(points[0], points[1], points[offending])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearityFailure {
    pub points: Vec<ProjPoint>,
    pub offending: usize,
    pub determinant: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineFit {
    Line(ProjLine),
    TooFewDistinct,
    NotCollinear(CollinearityFailure),
}

/// Joins the first two distinct points and checks the rest against it.
pub fn line_through_all(points: &[ProjPoint]) -> Result<LineFit, NetError> {
    let Some(first) = points.first() else {
        return Ok(LineFit::TooFewDistinct);
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return Ok(LineFit::TooFewDistinct);
    };
    let line = join(first, second)?;
    for (k, p) in points.iter().enumerate() {
        if !incident(p, &line)? {
            let determinant = det3(first.coords(), second.coords(), p.coords())?;
            return Ok(LineFit::NotCollinear(CollinearityFailure {
                points: points.to_vec(),
                offending: k,
                determinant,
            }));
        }
    }
    Ok(LineFit::Line(line))
}

/// Why a completion failed: the fiber of `symbol` in the square for class
/// `class` (1-based, so `class ≥ 3`) is not collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureCertificate {
    pub class: usize,
    pub symbol: usize,
    pub failure: CollinearityFailure,
}

impl fmt::Display for FailureCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no line l{}{}: points {} not collinear, determinant {} != 0",
            self.class,
            self.symbol,
            self.failure.points.iter().join(", "),
            self.failure.determinant
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Net(KNetConfig),
    Obstructed(FailureCertificate),
}

/// Completes `A₁`, `A₂` to a net whose perspectivities follow `squares`:
/// line `n` of class `m` is the line through `{l₁ᵢ ∩ l₂ⱼ : M_m[i][j] = n}`.
pub fn complete_net(a1: &LineClass, a2: &LineClass, squares: &[LatinSquare]) -> Result<Completion, NetError> {
    let d = a1.len();
    if a2.len() != d {
        return Err(NetError::SizeMismatch(d, a2.len()));
    }
    for s in squares {
        if s.order() != d {
            return Err(NetError::InvalidSquares(format!("square of order {} for d = {d}", s.order())));
        }
    }
    if !latin::is_orthogonal_set(squares)? {
        return Err(NetError::InvalidSquares("squares are not mutually orthogonal".into()));
    }
    let mut grid = Vec::with_capacity(d * d);
    for l in a1.lines() {
        for m in a2.lines() {
            grid.push(meet(l, m).map_err(|_| NetError::BadBasePoints)?);
        }
    }
    if grid.iter().collect::<HashSet<_>>().len() != d * d {
        return Err(NetError::BadBasePoints);
    }
    let mut classes = vec![a1.clone(), a2.clone()];
    for (si, square) in squares.iter().enumerate() {
        let mut lines = vec![];
        for symbol in 1..=d {
            let mut fiber: Vec<ProjPoint> = (0..d * d)
                .filter(|&k| square.get(k / d, k % d) == symbol)
                .map(|k| grid[k].clone())
                .collect();
            fiber.sort();
            match line_through_all(&fiber)? {
                LineFit::Line(l) => lines.push(l),
                LineFit::TooFewDistinct => return Err(NetError::DegenerateFiber { square: si, symbol }),
                LineFit::NotCollinear(failure) => {
                    return Ok(Completion::Obstructed(FailureCertificate { class: si + 3, symbol, failure }))
                }
            }
        }
        let class = LineClass::new(lines).map_err(|e| NetError::CompletionInvalid(e.to_string()))?;
        classes.push(class);
    }
    let net = KNetConfig::new(classes, grid)?;
    let report = verify_net(&net)?;
    if !report.passed() {
        return Err(NetError::CompletionInvalid(report.summary()));
    }
    Ok(Completion::Net(net))
}

/// `a[i] ∩ b[σ(i)]` all lie on `axis` (σ is 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perspectivity {
    pub sigma: Permutation,
    pub axis: ProjLine,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PerspectivityReport {
    pub perspectivities: Vec<Perspectivity>,
    /// Permutations whose meets all coincide; not counted.
    pub degenerate: Vec<Permutation>,
}

impl PerspectivityReport {
    pub fn count(&self) -> usize {
        self.perspectivities.len()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.perspectivities.iter().any(|p| &p.sigma == sigma)
    }
}

/// All perspectivities between two polygons of size at most
/// [`MAX_PERSPECTIVITY_ORDER`].
pub fn find_perspectivities(a: &LineClass, b: &LineClass) -> Result<PerspectivityReport, NetError> {
    find_perspectivities_with_limit(a, b, MAX_PERSPECTIVITY_ORDER)
}

/// As [`find_perspectivities`] with an explicit size limit (e.g. 6).
pub fn find_perspectivities_with_limit(
    a: &LineClass,
    b: &LineClass,
    max_order: usize,
) -> Result<PerspectivityReport, NetError> {
    let d = a.len();
    if b.len() != d {
        return Err(NetError::SizeMismatch(d, b.len()));
    }
    if d > max_order {
        return Err(NetError::OrderTooLarge(d));
    }
    for (i, l) in a.lines().iter().enumerate() {
        if let Some(j) = b.lines().iter().position(|m| m == l) {
            return Err(NetError::SharedLine { a: i, b: j });
        }
    }
    let meets: Vec<Vec<ProjPoint>> = a
        .lines()
        .iter()
        .map(|l| b.lines().iter().map(|m| meet(l, m)).collect())
        .collect::<Result<_, _>>()?;
    let mut report = PerspectivityReport::default();
    for sigma in Permutation::all(d) {
        let pts: Vec<ProjPoint> = (0..d).map(|i| meets[i][sigma.apply(i)].clone()).collect();
        match line_through_all(&pts)? {
            LineFit::Line(axis) => report.perspectivities.push(Perspectivity { sigma, axis }),
            LineFit::TooFewDistinct => report.degenerate.push(sigma),
            LineFit::NotCollinear(_) => {}
        }
    }
    Ok(report)
}

/// The line through the cross joins `⟨pᵢ, qⱼ⟩ ∩ ⟨pⱼ, qᵢ⟩` of the
/// projectivity `l → m` sending `pᵢ ↦ qᵢ`.
pub fn axis_of_homology(
    pairs: &[(ProjPoint, ProjPoint); 3],
    l: &ProjLine,
    m: &ProjLine,
) -> Result<ProjLine, NetError> {
    let bad = |msg: &str| NetError::DegenerateData(msg.to_string());
    if l == m {
        return Err(bad("the two ranges lie on the same line"));
    }
    for (p, q) in pairs {
        if !incident(p, l)? || !incident(q, m)? {
            return Err(bad("a pair does not lie on the given lines"));
        }
    }
    let ps: HashSet<_> = pairs.iter().map(|(p, _)| p).collect();
    let qs: HashSet<_> = pairs.iter().map(|(_, q)| q).collect();
    if ps.len() < 3 || qs.len() < 3 {
        return Err(bad("points on a range must be distinct"));
    }
    let mut cross = vec![];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (pi, qi) = &pairs[i];
        let (pj, qj) = &pairs[j];
        let a = join(pi, qj).map_err(|_| bad("cross join through a shared point"))?;
        let b = join(pj, qi).map_err(|_| bad("cross join through a shared point"))?;
        cross.push(meet(&a, &b).map_err(|_| bad("cross joins coincide"))?);
    }
    match line_through_all(&cross)? {
        LineFit::Line(axis) => Ok(axis),
        LineFit::TooFewDistinct => Err(bad("cross-join points coincide")),
        LineFit::NotCollinear(f) => Err(bad(&format!("cross joins not collinear (determinant {})", f.determinant))),
    }
}

/// Every partition of `points` (exactly `d²` of them) into `d` collinear
/// `d`-sets, one [`LineClass`] per partition, in sorted order.
pub fn discover_parallel_classes(points: &[ProjPoint], d: usize) -> Result<Vec<LineClass>, NetError> {
    if points.len() != d * d {
        return Err(NetError::WrongPointCount { expected: d * d, found: points.len() });
    }
    let mut index: HashMap<&ProjPoint, usize> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = index.get(p) {
            return Err(NetError::DuplicatePoint(first, i));
        }
        index.insert(p, i);
    }
    let mut on_line: BTreeMap<ProjLine, BTreeSet<usize>> = BTreeMap::new();
    for (i, j) in (0..points.len()).tuple_combinations() {
        let l = join(&points[i], &points[j])?;
        let set = on_line.entry(l).or_default();
        set.insert(i);
        set.insert(j);
    }
    if let Some((line, set)) = on_line.iter().find(|(_, s)| s.len() > d) {
        return Err(NetError::TooManyOnALine { line: line.clone(), count: set.len(), d });
    }
    let candidates: Vec<(ProjLine, Vec<usize>)> = on_line
        .into_iter()
        .filter(|(_, s)| s.len() == d)
        .map(|(l, s)| (l, s.into_iter().collect()))
        .collect();
    let options: Vec<Vec<usize>> = candidates.iter().map(|(_, s)| s.clone()).collect();
    let mut classes = vec![];
    for solution in exact_covers(points.len(), &options) {
        let lines = solution.iter().map(|&o| candidates[o].0.clone()).collect();
        classes.push(LineClass::new(lines)?.sorted());
    }
    classes.sort();
    Ok(classes)
}

/// Whether a `(k, d)`-net can exist in the complex projective plane by the
/// topological restriction `k = 3, d ≥ 2`; `k = 4, d ≥ 3`; `k = 5, d ≥ 6`.
/// This is only that restriction: `(4, 6)` passes here although no pair of
/// orthogonal Latin squares of order 6 exists.
pub fn is_admissible(k: usize, d: usize) -> bool {
    matches!((k, d), (3, 2..) | (4, 3..) | (5, 6..))
}
