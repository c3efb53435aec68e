//! Interval-valued neutrosophic soft sets: a total grid of [`IvnNumber`]
//! cells over parameters x universe, the lifted operation algebra, and the
//! AND/OR products over parameter pairs.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::interval::{Interval, ScaleKind};
use crate::number::{Component, IvnNumber};
use crate::scalar::Scalar;

/// Provenance for one endpoint fix made while loading leniently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRepair {
    pub parameter: String,
    pub object: String,
    pub component: Component,
    pub original_lo: Scalar,
    pub original_hi: Scalar,
    pub repaired: Interval,
    pub clamped: bool,
    pub swapped: bool,
}

impl CellRepair {
    pub fn describe(&self) -> String {
        let mut actions = Vec::new();
        if self.clamped {
            actions.push("clamped");
        }
        if self.swapped {
            actions.push("swapped");
        }
        format!(
            "{}/{} {}: [{}, {}] {} -> {}",
            self.parameter,
            self.object,
            self.component.short(),
            self.original_lo,
            self.original_hi,
            actions.join("+"),
            self.repaired.exact_text(),
        )
    }
}

/// A total mapping parameters x universe -> [`IvnNumber`].
///
/// Cells are stored parameter-major. Repairs recorded during lenient loading
/// travel with the set but do not take part in equality.
#[derive(Debug, Clone)]
pub struct IvnSoftSet {
    universe: Vec<String>,
    parameters: Vec<String>,
    cells: Vec<IvnNumber>,
    repairs: Vec<CellRepair>,
}

impl PartialEq for IvnSoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.parameters == other.parameters
            && self.cells == other.cells
    }
}

impl Eq for IvnSoftSet {}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::Schema(format!("duplicate {what} {name:?}")));
        }
    }
    Ok(())
}

impl IvnSoftSet {
    /// Builds a set from parameter-major cells; the cell list must cover the
    /// whole grid.
    pub fn new(
        universe: Vec<String>,
        parameters: Vec<String>,
        cells: Vec<IvnNumber>,
    ) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        check_unique(&universe, "object")?;
        check_unique(&parameters, "parameter")?;
        if cells.len() != universe.len() * parameters.len() {
            return Err(Error::Schema(format!(
                "expected {} cells, got {}",
                universe.len() * parameters.len(),
                cells.len()
            )));
        }
        Ok(IvnSoftSet {
            universe,
            parameters,
            cells,
            repairs: Vec::new(),
        })
    }

    pub fn with_repairs(mut self, repairs: Vec<CellRepair>) -> Self {
        self.repairs = repairs;
        self
    }

    /// Every cell `⟨[0,0],[1,1],[1,1]⟩`.
    pub fn make_empty(universe: Vec<String>, parameters: Vec<String>) -> Result<Self> {
        let cells = vec![IvnNumber::empty_value(); universe.len() * parameters.len()];
        IvnSoftSet::new(universe, parameters, cells)
    }

    /// Every cell `⟨[1,1],[0,0],[0,0]⟩`.
    pub fn make_universal(universe: Vec<String>, parameters: Vec<String>) -> Result<Self> {
        let cells = vec![IvnNumber::universal_value(); universe.len() * parameters.len()];
        IvnSoftSet::new(universe, parameters, cells)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn repairs(&self) -> &[CellRepair] {
        &self.repairs
    }

    pub fn cell(&self, parameter: usize, object: usize) -> &IvnNumber {
        &self.cells[parameter * self.universe.len() + object]
    }

    pub fn cell_by_name(&self, parameter: &str, object: &str) -> Option<&IvnNumber> {
        let p = self.parameters.iter().position(|x| x == parameter)?;
        let u = self.universe.iter().position(|x| x == object)?;
        Some(self.cell(p, u))
    }

    /// Hex digest identifying the value content of the set.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for name in &self.universe {
            hasher.update(name.as_bytes());
            hasher.update([0]);
        }
        hasher.update([1]);
        for name in &self.parameters {
            hasher.update(name.as_bytes());
            hasher.update([0]);
        }
        hasher.update([2]);
        for cell in &self.cells {
            hasher.update(cell.exact_text().as_bytes());
        }
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    fn check_aligned(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch("universes differ".to_string()));
        }
        if self.parameters != other.parameters {
            return Err(Error::UniverseMismatch(
                "parameter lists differ".to_string(),
            ));
        }
        Ok(())
    }

    fn zip_cells(
        &self,
        other: &Self,
        op: impl Fn(&IvnNumber, &IvnNumber) -> IvnNumber,
    ) -> Result<Self> {
        self.check_aligned(other)?;
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(a, b)| op(a, b))
            .collect();
        IvnSoftSet::new(self.universe.clone(), self.parameters.clone(), cells)
    }

    fn map_cells(&self, op: impl Fn(&IvnNumber) -> IvnNumber) -> Self {
        IvnSoftSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            cells: self.cells.iter().map(op).collect(),
            repairs: Vec::new(),
        }
    }

    /// Cell-wise component order on an aligned pair of sets.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_aligned(other)?;
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .all(|(a, b)| a.dominates(b)))
    }

    pub fn complement(&self) -> Self {
        self.map_cells(IvnNumber::complement)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_cells(other, IvnNumber::join)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_cells(other, IvnNumber::meet)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip_cells(other, IvnNumber::difference)
    }

    pub fn addition(&self, other: &Self) -> Result<Self> {
        self.zip_cells(other, IvnNumber::add)
    }

    pub fn scale(&self, c: &Scalar, kind: ScaleKind) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScalar(Box::new(c.clone())));
        }
        let cells: Result<Vec<_>> = self.cells.iter().map(|x| x.scale(c, kind)).collect();
        IvnSoftSet::new(self.universe.clone(), self.parameters.clone(), cells?)
    }

    pub fn truth_favorite(&self) -> Self {
        self.map_cells(IvnNumber::truth_favorite)
    }

    pub fn false_favorite(&self) -> Self {
        self.map_cells(IvnNumber::false_favorite)
    }

    /// OR product: parameter pairs in row-major order, cells joined.
    pub fn or_product(&self, other: &Self) -> Result<PairedIvnSoftSet> {
        self.product(other, IvnNumber::join)
    }

    /// AND product: parameter pairs in row-major order, cells met.
    pub fn and_product(&self, other: &Self) -> Result<PairedIvnSoftSet> {
        self.product(other, IvnNumber::meet)
    }

    fn product(
        &self,
        other: &Self,
        op: impl Fn(&IvnNumber, &IvnNumber) -> IvnNumber,
    ) -> Result<PairedIvnSoftSet> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch("universes differ".to_string()));
        }
        let pair_count = self.parameters.len() * other.parameters.len();
        let mut parameters = Vec::with_capacity(pair_count);
        let mut cells = Vec::with_capacity(pair_count * self.universe.len());
        for (p, left) in self.parameters.iter().enumerate() {
            for (q, right) in other.parameters.iter().enumerate() {
                parameters.push(PairedIvnSoftSet::pair_label(left, right));
                for u in 0..self.universe.len() {
                    cells.push(op(self.cell(p, u), other.cell(q, u)));
                }
            }
        }
        let inner = IvnSoftSet::new(self.universe.clone(), parameters, cells)?;
        Ok(PairedIvnSoftSet {
            inner,
            left: self.parameters.clone(),
            right: other.parameters.clone(),
        })
    }

    /// Flattened cell listing in (parameter-major, universe) order.
    pub fn relation_form(&self) -> Vec<((&str, &str), &IvnNumber)> {
        let mut entries = Vec::with_capacity(self.cells.len());
        for (p, parameter) in self.parameters.iter().enumerate() {
            for (u, object) in self.universe.iter().enumerate() {
                entries.push(((parameter.as_str(), object.as_str()), self.cell(p, u)));
            }
        }
        entries
    }

    /// Rebuilds a set from relation-form entries; the entries must cover the
    /// grid exactly once.
    pub fn from_relation(
        universe: Vec<String>,
        parameters: Vec<String>,
        entries: &[((String, String), IvnNumber)],
    ) -> Result<Self> {
        let mut cells: Vec<Option<IvnNumber>> = vec![None; universe.len() * parameters.len()];
        for ((parameter, object), value) in entries {
            let p = parameters
                .iter()
                .position(|x| x == parameter)
                .ok_or_else(|| Error::Schema(format!("unknown parameter {parameter:?}")))?;
            let u = universe
                .iter()
                .position(|x| x == object)
                .ok_or_else(|| Error::Schema(format!("unknown object {object:?}")))?;
            let slot = &mut cells[p * universe.len() + u];
            if slot.is_some() {
                return Err(Error::Schema(format!(
                    "duplicate cell {parameter}/{object}"
                )));
            }
            *slot = Some(value.clone());
        }
        let cells: Result<Vec<IvnNumber>> = cells
            .into_iter()
            .enumerate()
            .map(|(idx, cell)| {
                cell.ok_or_else(|| {
                    let p = idx / universe.len();
                    let u = idx % universe.len();
                    Error::Schema(format!("missing cell {}/{}", parameters[p], universe[u]))
                })
            })
            .collect();
        IvnSoftSet::new(universe, parameters, cells?)
    }
}

/// An ivn-soft set keyed by parameter pairs. Pairs are carried as opaque
/// parameter labels so that all soft-set machinery (thresholds, level sets,
/// decisions) applies unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedIvnSoftSet {
    inner: IvnSoftSet,
    left: Vec<String>,
    right: Vec<String>,
}

impl PairedIvnSoftSet {
    pub fn pair_label(left: &str, right: &str) -> String {
        format!("({left},{right})")
    }

    pub fn as_set(&self) -> &IvnSoftSet {
        &self.inner
    }

    pub fn into_set(self) -> IvnSoftSet {
        self.inner
    }

    pub fn left_parameters(&self) -> &[String] {
        &self.left
    }

    pub fn right_parameters(&self) -> &[String] {
        &self.right
    }

    pub fn cell_by_pair(&self, left: &str, right: &str, object: &str) -> Option<&IvnNumber> {
        self.inner
            .cell_by_name(&PairedIvnSoftSet::pair_label(left, right), object)
    }
}
