//! Self-contained LP/MILP modeling and solving.
//!
//! Models are built from named variables with bounds ([`VarSpec`]), sparse
//! linear expressions ([`LinExpr`]), and named constraints. The bundled
//! reference solver is a bounded-variable revised simplex (product-form
//! basis updates, Dantzig pricing with a Bland anti-cycling fallback) plus a
//! best-first branch-and-bound for binaries. External solvers can be plugged
//! in through [`SolverBackend`].
//!
//! Tolerances are fixed: primal/dual feasibility 1e-7, integrality 1e-6,
//! relative MILP gap 1e-6.

mod branch;
mod dualize;
mod simplex;
mod factor;
mod text;

pub use branch::solve_milp_with;
pub use dualize::{dualize, DualModel};
pub use text::write_lp_text;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Primal/dual feasibility tolerance of the bundled solver.
pub const FEAS_TOL: f64 = 1e-7;
/// Integrality tolerance for binary variables.
pub const INT_TOL: f64 = 1e-6;
/// Relative optimality gap at which branch-and-bound terminates.
pub const REL_GAP: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("variable name {0:?} already used")]
    DuplicateVarName(String),
    #[error("constraint name {0:?} already used")]
    DuplicateConstraintName(String),
    #[error("variable id {0:?} is not registered in this model")]
    UnknownVar(VarId),
    #[error("bounds [{lower}, {upper}] of {name:?} are empty")]
    EmptyBounds { name: String, lower: f64, upper: f64 },
    #[error("binary variable {0:?} must have bounds within [0, 1]")]
    BinaryBounds(String),
    #[error("non-finite coefficient on {name:?}")]
    NonFiniteCoefficient { name: String },
    #[error("non-finite right-hand side on constraint {0:?}")]
    NonFiniteRhs(String),
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("simplex did not reach the required accuracy: {0}")]
    Numerical(String),
}

#[derive(Debug, Error)]
pub enum DualError {
    #[error("constraint {0:?} not present in the solved model")]
    UnknownConstraint(String),
    #[error("duals are not available for MILP solves")]
    MilpUnsupported,
    #[error("duals are only defined for optimal solutions, status was {0:?}")]
    NotOptimal(SolveStatus),
}

#[derive(Debug, Error)]
pub enum BackendError {
    #[error("no backend registered under name {0:?}")]
    Unregistered(String),
    #[error("backend {backend:?} failed: {message}")]
    Failed { backend: String, message: String },
}

/// Opaque handle to a registered variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub(crate) u32);

impl VarId {
    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Continuous,
    Binary,
}

/// Variable declaration: name, bounds, kind.
#[derive(Debug, Clone)]
pub struct VarSpec {
    pub name: String,
    pub lower: f64,
    pub upper: f64,
    pub kind: VarKind,
}

impl VarSpec {
    pub fn continuous(name: impl Into<String>, lower: f64, upper: f64) -> Self {
        VarSpec { name: name.into(), lower, upper, kind: VarKind::Continuous }
    }

    pub fn nonneg(name: impl Into<String>) -> Self {
        Self::continuous(name, 0.0, f64::INFINITY)
    }

    pub fn free(name: impl Into<String>) -> Self {
        Self::continuous(name, f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn fixed(name: impl Into<String>, value: f64) -> Self {
        Self::continuous(name, value, value)
    }

    pub fn binary(name: impl Into<String>) -> Self {
        VarSpec { name: name.into(), lower: 0.0, upper: 1.0, kind: VarKind::Binary }
    }
}

/// Sparse affine expression `sum(coef * var) + constant`.
///
/// Terms are kept sorted by variable id with no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinExpr {
    terms: Vec<(VarId, f64)>,
    pub constant: f64,
}

impl LinExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        LinExpr { terms: Vec::new(), constant: c }
    }

    pub fn term(var: VarId, coef: f64) -> Self {
        let mut e = LinExpr::new();
        e.add_term(var, coef);
        e
    }

    /// Adds `coef * var`, merging with an existing term for `var`.
    pub fn add_term(&mut self, var: VarId, coef: f64) -> &mut Self {
        if coef == 0.0 {
            return self;
        }
        match self.terms.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(pos) => {
                self.terms[pos].1 += coef;
                if self.terms[pos].1 == 0.0 {
                    self.terms.remove(pos);
                }
            }
            Err(pos) => self.terms.insert(pos, (var, coef)),
        }
        self
    }

    pub fn add_constant(&mut self, c: f64) -> &mut Self {
        self.constant += c;
        self
    }

    pub fn add_expr(&mut self, other: &LinExpr, scale: f64) -> &mut Self {
        for &(v, c) in &other.terms {
            self.add_term(v, c * scale);
        }
        self.constant += other.constant * scale;
        self
    }

    pub fn terms(&self) -> &[(VarId, f64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates the expression under a dense value vector indexed by var id.
    pub fn eval(&self, values: &[f64]) -> f64 {
        self.terms.iter().map(|&(v, c)| c * values[v.index()]).sum::<f64>() + self.constant
    }

    /// Builds an expression from `(var, coef)` pairs.
    pub fn from_terms(pairs: impl IntoIterator<Item = (VarId, f64)>) -> Self {
        let mut e = LinExpr::new();
        for (v, c) in pairs {
            e.add_term(v, c);
        }
        e
    }
}

/// Constraint sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sense::Le => write!(f, "<="),
            Sense::Eq => write!(f, "="),
            Sense::Ge => write!(f, ">="),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub expr: LinExpr,
    pub sense: Sense,
    pub rhs: f64,
    pub name: String,
}

impl Constraint {
    pub fn new(name: impl Into<String>, expr: LinExpr, sense: Sense, rhs: f64) -> Self {
        Constraint { expr, sense, rhs, name: name.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

/// LP/MILP model: a variable registry, named sparse constraints, and a
/// linear objective.
#[derive(Debug, Clone)]
pub struct MilpModel {
    pub direction: Direction,
    vars: Vec<VarSpec>,
    var_names: HashMap<String, VarId>,
    constraints: Vec<Constraint>,
    constraint_names: HashMap<String, usize>,
    objective: LinExpr,
}

impl MilpModel {
    pub fn new(direction: Direction) -> Self {
        MilpModel {
            direction,
            vars: Vec::new(),
            var_names: HashMap::new(),
            constraints: Vec::new(),
            constraint_names: HashMap::new(),
            objective: LinExpr::new(),
        }
    }

    pub fn maximize() -> Self {
        Self::new(Direction::Maximize)
    }

    pub fn minimize() -> Self {
        Self::new(Direction::Minimize)
    }

    pub fn add_var(&mut self, spec: VarSpec) -> Result<VarId, ModelError> {
        if self.var_names.contains_key(&spec.name) {
            return Err(ModelError::DuplicateVarName(spec.name));
        }
        if !(spec.lower <= spec.upper) {
            return Err(ModelError::EmptyBounds {
                name: spec.name,
                lower: spec.lower,
                upper: spec.upper,
            });
        }
        if spec.kind == VarKind::Binary && (spec.lower < 0.0 || spec.upper > 1.0) {
            return Err(ModelError::BinaryBounds(spec.name));
        }
        let id = VarId(self.vars.len() as u32);
        self.var_names.insert(spec.name.clone(), id);
        self.vars.push(spec);
        Ok(id)
    }

    pub fn add_constraint(&mut self, c: Constraint) -> Result<usize, ModelError> {
        if self.constraint_names.contains_key(&c.name) {
            return Err(ModelError::DuplicateConstraintName(c.name));
        }
        for &(v, coef) in c.expr.terms() {
            if v.index() >= self.vars.len() {
                return Err(ModelError::UnknownVar(v));
            }
            if !coef.is_finite() {
                return Err(ModelError::NonFiniteCoefficient {
                    name: self.vars[v.index()].name.clone(),
                });
            }
        }
        if !c.rhs.is_finite() || !c.expr.constant.is_finite() {
            return Err(ModelError::NonFiniteRhs(c.name));
        }
        let idx = self.constraints.len();
        self.constraint_names.insert(c.name.clone(), idx);
        self.constraints.push(c);
        Ok(idx)
    }

    pub fn set_objective(&mut self, objective: LinExpr) {
        self.objective = objective;
    }

    pub fn objective(&self) -> &LinExpr {
        &self.objective
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn var(&self, id: VarId) -> &VarSpec {
        &self.vars[id.index()]
    }

    pub fn var_mut(&mut self, id: VarId) -> &mut VarSpec {
        &mut self.vars[id.index()]
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, &VarSpec)> {
        self.vars.iter().enumerate().map(|(i, s)| (VarId(i as u32), s))
    }

    pub fn var_by_name(&self, name: &str) -> Option<VarId> {
        self.var_names.get(name).copied()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn constraint_by_name(&self, name: &str) -> Option<&Constraint> {
        self.constraint_names.get(name).map(|&i| &self.constraints[i])
    }

    /// Tightens the bounds of `var` to the intersection with `[lower, upper]`.
    pub fn tighten_bounds(&mut self, var: VarId, lower: f64, upper: f64) -> Result<(), ModelError> {
        let spec = &mut self.vars[var.index()];
        let lo = spec.lower.max(lower);
        let hi = spec.upper.min(upper);
        if !(lo <= hi) {
            return Err(ModelError::EmptyBounds { name: spec.name.clone(), lower: lo, upper: hi });
        }
        spec.lower = lo;
        spec.upper = hi;
        Ok(())
    }

    pub fn binary_vars(&self) -> Vec<VarId> {
        self.vars()
            .filter(|(_, s)| s.kind == VarKind::Binary)
            .map(|(id, _)| id)
            .collect()
    }

    /// Removes the named constraint (used by the infeasibility deletion
    /// filter); returns it if present.
    pub fn remove_constraint(&mut self, name: &str) -> Option<Constraint> {
        let idx = self.constraint_names.remove(name)?;
        let c = self.constraints.remove(idx);
        for v in self.constraint_names.values_mut() {
            if *v > idx {
                *v -= 1;
            }
        }
        Some(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

/// Solver output: status, primal values, objective, LP duals, MILP gap.
#[derive(Debug, Clone)]
pub struct MilpSolution {
    pub status: SolveStatus,
    /// Value per registered variable (indexed by `VarId`); meaningful when an
    /// incumbent exists.
    pub values: Vec<f64>,
    pub objective: f64,
    /// Constraint-name → dual multiplier, present for LP solves only.
    /// Sign convention: duals are sensitivities d(objective)/d(rhs), so duals
    /// of `<=` constraints in a maximization are >= 0.
    pub duals: Option<HashMap<String, f64>>,
    /// Relative MILP gap at termination (0 for LP solves).
    pub gap: f64,
    /// Simplex iterations (summed over branch-and-bound nodes).
    pub iterations: usize,
    /// Branch-and-bound nodes explored (0 for pure LP solves).
    pub nodes: usize,
}

impl MilpSolution {
    pub fn value(&self, var: VarId) -> f64 {
        self.values[var.index()]
    }

    pub fn dual(&self, name: &str) -> Result<f64, DualError> {
        if self.status != SolveStatus::Optimal {
            return Err(DualError::NotOptimal(self.status));
        }
        match &self.duals {
            None => Err(DualError::MilpUnsupported),
            Some(map) => map
                .get(name)
                .copied()
                .ok_or_else(|| DualError::UnknownConstraint(name.to_string())),
        }
    }
}

/// Returns the dual multiplier of a named constraint from an LP solve.
pub fn dual_of(sol: &MilpSolution, name: &str) -> Result<f64, DualError> {
    sol.dual(name)
}

/// Solver knobs. The defaults match the documented contract; tests and the
/// CLI mostly use them unchanged.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    pub feas_tol: f64,
    pub int_tol: f64,
    pub rel_gap: f64,
    /// Hard cap on simplex iterations per LP solve.
    pub max_simplex_iters: usize,
    /// Hard cap on branch-and-bound nodes.
    pub max_nodes: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            feas_tol: FEAS_TOL,
            int_tol: INT_TOL,
            rel_gap: REL_GAP,
            max_simplex_iters: 2_000_000,
            max_nodes: 200_000,
        }
    }
}

/// Solves the LP relaxation of `model` (binaries relaxed to `[0,1]`),
/// returning an optimal basic solution with duals.
pub fn solve_lp(model: &MilpModel) -> Result<MilpSolution, SolveError> {
    simplex::solve_relaxation(model, &SolverOptions::default())
}

pub fn solve_lp_with(model: &MilpModel, opts: &SolverOptions) -> Result<MilpSolution, SolveError> {
    simplex::solve_relaxation(model, opts)
}

/// Solves `model` to MILP optimality by best-first branch-and-bound
/// (branching on the most fractional binary, ties by lowest variable id).
pub fn solve_milp(model: &MilpModel) -> Result<MilpSolution, SolveError> {
    branch::solve_milp_with(model, &SolverOptions::default())
}

/// Contract every solving backend fulfills; `backend_solve` routes through a
/// registry so external solvers can replace the bundled one behind the same
/// model types.
pub trait SolverBackend: Send + Sync {
    fn name(&self) -> &str;
    fn solve(&self, model: &MilpModel) -> Result<MilpSolution, String>;
}

/// The bundled simplex + branch-and-bound reference solver.
#[derive(Debug, Default)]
pub struct BundledBackend;

impl SolverBackend for BundledBackend {
    fn name(&self) -> &str {
        "bundled"
    }

    fn solve(&self, model: &MilpModel) -> Result<MilpSolution, String> {
        solve_milp(model).map_err(|e| e.to_string())
    }
}

/// Name-keyed backend registry. The bundled backend is pre-registered.
pub struct BackendRegistry {
    backends: Vec<Box<dyn SolverBackend>>,
}

impl Default for BackendRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl BackendRegistry {
    pub fn new() -> Self {
        BackendRegistry { backends: vec![Box::new(BundledBackend)] }
    }

    pub fn register(&mut self, backend: Box<dyn SolverBackend>) {
        self.backends.push(backend);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SolverBackend> {
        self.backends.iter().rev().find(|b| b.name() == name).map(|b| b.as_ref())
    }

    /// Solves `model` with the named backend.
    pub fn solve(&self, model: &MilpModel, backend: &str) -> Result<MilpSolution, BackendError> {
        let b = self
            .get(backend)
            .ok_or_else(|| BackendError::Unregistered(backend.to_string()))?;
        b.solve(model).map_err(|message| BackendError::Failed {
            backend: backend.to_string(),
            message,
        })
    }
}

/// Solves through a backend instance directly.
pub fn backend_solve(
    model: &MilpModel,
    backend: &dyn SolverBackend,
) -> Result<MilpSolution, BackendError> {
    backend.solve(model).map_err(|message| BackendError::Failed {
        backend: backend.name().to_string(),
        message,
    })
}

/// Maximum violation of the model's constraints and bounds at `values`.
pub fn max_violation(model: &MilpModel, values: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for c in model.constraints() {
        let lhs = c.expr.eval(values);
        let v = match c.sense {
            Sense::Le => lhs - c.rhs,
            Sense::Ge => c.rhs - lhs,
            Sense::Eq => (lhs - c.rhs).abs(),
        };
        worst = worst.max(v);
    }
    for (id, spec) in model.vars() {
        let x = values[id.index()];
        worst = worst.max(spec.lower - x).max(x - spec.upper);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_lp() -> (MilpModel, VarId, VarId) {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::continuous("x", 0.0, 4.0)).unwrap();
        let y = m.add_var(VarSpec::continuous("y", 0.0, 3.0)).unwrap();
        m.add_constraint(Constraint::new(
            "cap",
            LinExpr::from_terms([(x, 1.0), (y, 2.0)]),
            Sense::Le,
            10.0,
        ))
        .unwrap();
        m.set_objective(LinExpr::from_terms([(x, 2.0), (y, 3.0)]));
        (m, x, y)
    }

    #[test]
    fn add_var_rejects_duplicates() {
        let mut m = MilpModel::maximize();
        m.add_var(VarSpec::nonneg("x")).unwrap();
        assert!(matches!(
            m.add_var(VarSpec::nonneg("x")),
            Err(ModelError::DuplicateVarName(_))
        ));
    }

    #[test]
    fn unbounded_single_var_reported() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::nonneg("x")).unwrap();
        m.set_objective(LinExpr::term(x, 1.0));
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Unbounded);
    }

    #[test]
    fn binary_objective_max() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::binary("x")).unwrap();
        m.set_objective(LinExpr::term(x, 1.0));
        let sol = solve_milp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.value(x) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fixed_variable_solves_exactly() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::fixed("x", 3.0)).unwrap();
        m.set_objective(LinExpr::term(x, 1.0));
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert_eq!(sol.value(x), 3.0);
    }

    #[test]
    fn linexpr_normalizes_zero_terms() {
        let mut e = LinExpr::new();
        e.add_term(VarId(0), 2.0);
        e.add_term(VarId(0), -2.0);
        assert!(e.is_empty());
    }

    #[test]
    fn duals_follow_sensitivity_convention() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::nonneg("x")).unwrap();
        m.add_constraint(Constraint::new("lim", LinExpr::term(x, 1.0), Sense::Le, 5.0))
            .unwrap();
        m.set_objective(LinExpr::term(x, 1.0));
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 5.0).abs() < 1e-9);
        assert!((dual_of(&sol, "lim").unwrap() - 1.0).abs() < 1e-7);
    }

    #[test]
    fn nonbinding_constraint_has_zero_dual() {
        let (mut m, x, _) = simple_lp();
        // Make "cap" slack at the optimum by loosening it.
        m.remove_constraint("cap").unwrap();
        m.add_constraint(Constraint::new(
            "cap",
            LinExpr::term(x, 1.0),
            Sense::Le,
            100.0,
        ))
        .unwrap();
        let sol = solve_lp(&m).unwrap();
        assert!((dual_of(&sol, "cap").unwrap()).abs() < 1e-9);
    }

    #[test]
    fn two_var_lp_vertex_and_duals() {
        // max 2x+3y s.t. x<=4 (bound), y<=3 (bound), x+2y<=10.5 -> (4,3), 17.
        // The 10.5 rhs keeps the coupling row slack so the dual basis is
        // unique: dual of the x cap is 2.
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::nonneg("x")).unwrap();
        let y = m.add_var(VarSpec::nonneg("y")).unwrap();
        m.add_constraint(Constraint::new("x_cap", LinExpr::term(x, 1.0), Sense::Le, 4.0))
            .unwrap();
        m.add_constraint(Constraint::new("y_cap", LinExpr::term(y, 1.0), Sense::Le, 3.0))
            .unwrap();
        m.add_constraint(Constraint::new(
            "mix",
            LinExpr::from_terms([(x, 1.0), (y, 2.0)]),
            Sense::Le,
            10.5,
        ))
        .unwrap();
        m.set_objective(LinExpr::from_terms([(x, 2.0), (y, 3.0)]));
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 17.0).abs() < 1e-8);
        assert!((sol.value(x) - 4.0).abs() < 1e-8);
        assert!((sol.value(y) - 3.0).abs() < 1e-8);
        assert!((dual_of(&sol, "x_cap").unwrap() - 2.0).abs() < 1e-7);
        assert!((dual_of(&sol, "mix").unwrap()).abs() < 1e-9);
        // And with the tight rhs of 10 the objective is still 17.
        let (m2, _, _) = simple_lp();
        let sol2 = solve_lp(&m2).unwrap();
        assert!((sol2.objective - 17.0).abs() < 1e-8);
    }

    #[test]
    fn infeasible_box_reported() {
        let mut m = MilpModel::minimize();
        let x = m.add_var(VarSpec::free("x")).unwrap();
        m.add_constraint(Constraint::new("lo", LinExpr::term(x, 1.0), Sense::Ge, 1.0))
            .unwrap();
        m.add_constraint(Constraint::new("hi", LinExpr::term(x, 1.0), Sense::Le, 0.0))
            .unwrap();
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Infeasible);
    }

    #[test]
    fn milp_knapsack() {
        // max 5a+4b s.t. 3a+2b<=4, binaries. Enumerating the four
        // assignments: (0,0)=0, (1,0)=5, (0,1)=4, (1,1) infeasible.
        let mut m = MilpModel::maximize();
        let a = m.add_var(VarSpec::binary("a")).unwrap();
        let b = m.add_var(VarSpec::binary("b")).unwrap();
        m.add_constraint(Constraint::new(
            "w",
            LinExpr::from_terms([(a, 3.0), (b, 2.0)]),
            Sense::Le,
            4.0,
        ))
        .unwrap();
        m.set_objective(LinExpr::from_terms([(a, 5.0), (b, 4.0)]));
        let sol = solve_milp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 5.0).abs() < 1e-9);
        assert!((sol.value(a) - 1.0).abs() < 1e-6);
        assert!(sol.value(b).abs() < 1e-6);
    }

    #[test]
    fn milp_rounds_down_when_fraction_infeasible() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::binary("x")).unwrap();
        m.add_constraint(Constraint::new("cap", LinExpr::term(x, 1.0), Sense::Le, 0.4))
            .unwrap();
        m.set_objective(LinExpr::term(x, 1.0));
        let sol = solve_milp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!(sol.value(x).abs() < 1e-9);
        assert!(sol.objective.abs() < 1e-9);
    }

    #[test]
    fn milp_without_binaries_matches_lp() {
        let (m, _, _) = simple_lp();
        let lp = solve_lp(&m).unwrap();
        let milp = solve_milp(&m).unwrap();
        assert_eq!(lp.status, milp.status);
        assert_eq!(lp.objective, milp.objective);
        assert!(milp.duals.is_some());
    }

    #[test]
    fn dual_lookup_errors() {
        let (m, _, _) = simple_lp();
        let sol = solve_lp(&m).unwrap();
        assert!(matches!(sol.dual("nope"), Err(DualError::UnknownConstraint(_))));

        let mut mb = MilpModel::maximize();
        let b = mb.add_var(VarSpec::binary("b")).unwrap();
        mb.add_constraint(Constraint::new("c", LinExpr::term(b, 1.0), Sense::Le, 1.0))
            .unwrap();
        mb.set_objective(LinExpr::term(b, 1.0));
        let sol = solve_milp(&mb).unwrap();
        assert!(matches!(sol.dual("c"), Err(DualError::MilpUnsupported)));
    }

    #[test]
    fn backend_registry_routes() {
        let (m, _, _) = simple_lp();
        let reg = BackendRegistry::new();
        let sol = reg.solve(&m, "bundled").unwrap();
        assert!((sol.objective - 17.0).abs() < 1e-8);
        assert!(matches!(
            reg.solve(&m, "external-foo"),
            Err(BackendError::Unregistered(_))
        ));
    }

    #[test]
    fn empty_model_with_fixed_vars_evaluates_directly() {
        let mut m = MilpModel::maximize();
        let x = m.add_var(VarSpec::fixed("x", 2.5)).unwrap();
        m.set_objective(LinExpr::from_terms([(x, 4.0)]));
        let sol = solve_lp(&m).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 10.0).abs() < 1e-9);
    }
}
