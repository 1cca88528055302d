use thiserror::Error;

/// Failures of scalar partition counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator at position {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generator at position {index} is {value}, expected a positive integer")]
    NonPositiveGenerator { index: usize, value: i128 },
    #[error("partition argument {argument} exceeds the table limit {limit}")]
    ArgumentTooLarge { argument: i128, limit: i128 },
}

/// Failures while building or evaluating a two-row generator system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("column (0, 0) is not a valid generator")]
    ZeroColumn,
    #[error("column 0 must be the slack column (1, 0), found ({weight}, {value})")]
    MissingSlack { weight: u32, value: u32 },
    #[error("column {index} = ({weight}, {value}) is not primitive (gcd > 1)")]
    NonPrimitiveColumn {
        index: usize,
        weight: u32,
        value: u32,
    },
    #[error(
        "column {index} does not have a strictly larger value/weight ratio than column {prev}"
    )]
    RatioOrder { index: usize, prev: usize },
    #[error("generator matrix needs at least one column besides the slack")]
    NoItems,
    #[error("column index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Reasons a raw item list is not a supported knapsack instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("instance has no items")]
    EmptyInstance,
    #[error("capacity {0} is negative")]
    NegativeCapacity(i64),
    #[error("item {index} = ({weight}, {value}) has a zero component")]
    ZeroComponent {
        index: usize,
        weight: i64,
        value: i64,
    },
    #[error("item {index} = ({weight}, {value}) has a negative component")]
    NegativeComponent {
        index: usize,
        weight: i64,
        value: i64,
    },
    #[error("item {index} = ({weight}, {value}) has a component above {max}", max = u32::MAX)]
    ComponentTooLarge {
        index: usize,
        weight: i64,
        value: i64,
    },
    #[error("item {index} = ({weight}, {value}) has gcd(weight, value) > 1")]
    NonCoprimeItem {
        index: usize,
        weight: i64,
        value: i64,
    },
    #[error("items ({0}, {1}) and ({2}, {3}) have the same value/weight ratio")]
    DuplicateRatio(u32, u32, u32, u32),
}

/// Failures of the brute-force reference implementations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs about {required} steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
