use thiserror::Error;

/// Everything that can go wrong while building or evaluating a problem.
#[derive(Debug, Error)]
pub enum Error {
    // ---- graph construction ----
    #[error("graph needs at least one edge")]
    EmptyEdgeList,
    #[error("graph needs at least two sites, got {0}")]
    TooFewSites(usize),
    #[error("edge ({i}, {j}) references a site outside 0..{n_sites}")]
    SiteOutOfRange { i: usize, j: usize, n_sites: usize },
    #[error("edge ({i}, {j}) is a self-loop")]
    SelfLoop { i: usize, j: usize },
    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },
    #[error("edge distance must be positive and finite, got {0}")]
    BadDistance(f64),
    #[error("spatial exponent must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    // ---- linker catalog / ratio / penalty weights ----
    #[error("linker catalog is empty")]
    EmptyCatalog,
    #[error("linker {label:?} needs a positive finite length, got {length}")]
    BadLinkerLength { label: String, length: f64 },
    #[error("duplicate linker label {0:?}")]
    DuplicateLabel(String),
    #[error("ratio lists {got} counts but the catalog has {expected} linker types")]
    RatioArityMismatch { got: usize, expected: usize },
    #[error("ratio counts sum to {got}, expected {expected} (one linker per site)")]
    RatioSumMismatch { got: u64, expected: u64 },
    #[error("penalty weight must be positive and finite, got {0}")]
    BadPenaltyWeight(f64),

    // ---- qubit layout / configurations ----
    #[error("site index {site} outside 0..{n_sites}")]
    BadSite { site: usize, n_sites: usize },
    #[error("type index {ty} outside 0..{n_types}")]
    BadTypeIndex { ty: usize, n_types: usize },
    #[error("configuration has {got} bits, this problem needs {expected}")]
    ConfigLenMismatch { got: usize, expected: usize },
    #[error("configuration strings may contain only '0' and '1', found {0:?}")]
    BadConfigChar(char),
    #[error("basis index {index} does not fit in {n_qubits} bits")]
    IndexOutOfRange { index: u64, n_qubits: usize },

    // ---- exact enumeration ----
    #[error("{qubits} binary variables exceed the enumeration bound of {limit}")]
    EnumerationBound { qubits: usize, limit: usize },
    #[error("spectrum depth must be at least 1")]
    ZeroSpectrumDepth,

    // ---- statevector simulation ----
    #[error("simulator supports at most {limit} qubits, asked for {qubits}")]
    SimulatorBound { qubits: usize, limit: usize },
    #[error("qubit {qubit} outside 0..{n_qubits}")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("entangling gate needs two distinct qubits, got {0} twice")]
    IdenticalQubits(usize),
    #[error("ansatz over {n_qubits} qubits needs {expected} angles, got {got}")]
    ParamCountMismatch {
        n_qubits: usize,
        expected: usize,
        got: usize,
    },
    #[error("shot count must be at least 1")]
    ZeroShots,
    #[error("counts sum to {got} but {expected} shots were declared")]
    CountShotMismatch { got: u64, expected: u64 },

    // ---- optimization loop ----
    #[error("optimizer needs at least one iteration")]
    ZeroIterations,
    #[error("run count must be at least 1")]
    ZeroRuns,
    #[error("objective returned a non-finite value at iteration {iteration}")]
    NonFiniteObjective { iteration: usize },
    #[error("run {run} failed: {source}")]
    RunFailed {
        run: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("cannot aggregate an empty run list")]
    NoRuns,
    #[error("alpha sweep needs at least one exponent")]
    EmptyAlphaList,

    // ---- problem files ----
    #[error("cannot read {path}: {source}")]
    FileRead {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    FileWrite {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: not valid JSON: {message}")]
    FileParse { origin: String, message: String },
    #[error("{origin}: does not match the problem schema: {message}")]
    FileSchema { origin: String, message: String },
    #[error("ratio entry {label:?} does not match any linker label")]
    UnknownRatioLabel { label: String },
    #[error("ratio is missing an entry for linker {label:?}")]
    MissingRatioLabel { label: String },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
