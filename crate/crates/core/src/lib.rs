//! Scheduling, trading, and cost evaluation for a renewable power-to-ammonia
//! virtual power plant operating in electricity, hydrogen, and ammonia markets.
//!
//! The crate is organized bottom-up:
//!
//! - [`timegrid`]: hierarchical (month, day, hour) time indexing.
//! - [`lp`]: a self-contained LP/MILP representation with a bundled
//!   revised-simplex + branch-and-bound solver and a backend-neutral
//!   solver contract.
//! - [`plant`]: physical operation constraints of the plant (power balance,
//!   electrolyzer, synthesis reactor, hydrogen/ammonia buffers) plus an
//!   independent schedule validator.
//! - [`markets`]: trading constraints for the electricity (annual/monthly
//!   contract + day-ahead), ammonia, and hydrogen markets.
//! - [`scheduler`]: the deterministic profit-maximization MILP over a window.
//! - [`robust`]: two-stage robust optimization over a budgeted uncertainty
//!   set, solved by column-and-constraint generation.
//! - [`rolling`]: receding-horizon contract staging (annual, monthly, daily)
//!   and realized-dispatch settlement.
//! - [`economics`]: levelized cost of ammonia, annualized investment, O&M.
//! - [`dataio`]: CSV/JSON ingestion, synthetic data generation, run configs,
//!   and reproducibility manifests.

pub mod dataio;
pub mod economics;
pub mod lp;
pub mod markets;
pub mod plant;
pub mod robust;
pub mod rolling;
pub mod scheduler;
pub mod timegrid;

pub use dataio::{RunConfig, SyntheticProfile};
pub use economics::CostBook;
pub use lp::{
    Constraint, LinExpr, MilpModel, MilpSolution, Sense, SolveStatus, VarId, VarKind, VarSpec,
};
pub use markets::{DemandBook, GridLimits, PriceBook, TradingMode};
pub use plant::{PlantConfig, Schedule};
pub use robust::{Scenario, UncertaintySet};
pub use scheduler::ProblemInstance;
pub use timegrid::{TimeGrid, Window};
