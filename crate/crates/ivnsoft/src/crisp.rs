//! Classical (crisp) soft sets: a 0/1 table mapping parameters to subsets of
//! the universe, plus the choice values that drive the decision step.

use crate::error::{Error, Result};

/// A parameterized family of subsets of a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSoftSet {
    universe: Vec<String>,
    parameters: Vec<String>,
    /// rows[p][u] — one row per parameter, one column per object.
    rows: Vec<Vec<bool>>,
}

/// Choice values: per-object counts of surviving parameters, with the
/// derived ranking and tie groups. Ties keep universe order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceValues {
    /// `(object, count)` in universe order.
    pub counts: Vec<(String, usize)>,
    /// Objects sorted by count descending; equal counts keep universe order.
    pub ranking: Vec<String>,
    /// `(count, objects)` groups, descending by count.
    pub tie_groups: Vec<(usize, Vec<String>)>,
}

impl ChoiceValues {
    /// Objects attaining the maximum count.
    pub fn optimal(&self) -> Vec<String> {
        self.tie_groups
            .first()
            .map(|(_, objects)| objects.clone())
            .unwrap_or_default()
    }

    pub fn count_of(&self, object: &str) -> Option<usize> {
        self.counts
            .iter()
            .find(|(name, _)| name == object)
            .map(|(_, c)| *c)
    }
}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::Schema(format!("duplicate {what} {name:?}")));
        }
    }
    Ok(())
}

impl CrispSoftSet {
    pub fn new(
        universe: Vec<String>,
        parameters: Vec<String>,
        rows: Vec<Vec<bool>>,
    ) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        check_unique(&universe, "object")?;
        check_unique(&parameters, "parameter")?;
        if rows.len() != parameters.len() || rows.iter().any(|r| r.len() != universe.len()) {
            return Err(Error::Schema(
                "table shape does not match parameters x universe".to_string(),
            ));
        }
        Ok(CrispSoftSet {
            universe,
            parameters,
            rows,
        })
    }

    /// Builds from explicit member lists; omitted parameters get the empty
    /// subset. Member names must belong to the universe.
    pub fn from_members(
        universe: Vec<String>,
        parameters: Vec<String>,
        members: &[(&str, Vec<&str>)],
    ) -> Result<Self> {
        let mut rows = vec![vec![false; universe.len()]; parameters.len()];
        for (parameter, objects) in members {
            let p = parameters
                .iter()
                .position(|x| x == parameter)
                .ok_or_else(|| Error::Schema(format!("unknown parameter {parameter:?}")))?;
            for object in objects {
                let u = universe
                    .iter()
                    .position(|x| x == object)
                    .ok_or_else(|| Error::Schema(format!("unknown object {object:?}")))?;
                rows[p][u] = true;
            }
        }
        CrispSoftSet::new(universe, parameters, rows)
    }

    pub fn empty(universe: Vec<String>, parameters: Vec<String>) -> Result<Self> {
        let rows = vec![vec![false; universe.len()]; parameters.len()];
        CrispSoftSet::new(universe, parameters, rows)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn contains(&self, parameter: usize, object: usize) -> bool {
        self.rows[parameter][object]
    }

    /// Object names in the subset of one parameter, universe order.
    pub fn row_members(&self, parameter: usize) -> Vec<&str> {
        self.universe
            .iter()
            .enumerate()
            .filter(|(u, _)| self.rows[parameter][*u])
            .map(|(_, name)| name.as_str())
            .collect()
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

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_aligned(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| *x || *y).collect())
            .collect();
        CrispSoftSet::new(self.universe.clone(), self.parameters.clone(), rows)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_aligned(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| *x && *y).collect())
            .collect();
        CrispSoftSet::new(self.universe.clone(), self.parameters.clone(), rows)
    }

    pub fn complement(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| !x).collect())
            .collect();
        CrispSoftSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            rows,
        }
    }

    /// Every member cell of `self` is also a member cell of `other`.
    pub fn table_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_aligned(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| !x || *y)))
    }

    /// Column sums, ranking and tie groups.
    pub fn choice_values(&self) -> ChoiceValues {
        let counts: Vec<(String, usize)> = self
            .universe
            .iter()
            .enumerate()
            .map(|(u, name)| {
                let count = self.rows.iter().filter(|row| row[u]).count();
                (name.clone(), count)
            })
            .collect();

        let mut order: Vec<usize> = (0..counts.len()).collect();
        order.sort_by(|a, b| counts[*b].1.cmp(&counts[*a].1)); // stable: ties keep universe order
        let ranking: Vec<String> = order.iter().map(|&u| counts[u].0.clone()).collect();

        let mut tie_groups: Vec<(usize, Vec<String>)> = Vec::new();
        for &u in &order {
            let (name, count) = &counts[u];
            match tie_groups.last_mut() {
                Some((c, group)) if *c == *count => group.push(name.clone()),
                _ => tie_groups.push((*count, vec![name.clone()])),
            }
        }

        ChoiceValues {
            counts,
            ranking,
            tie_groups,
        }
    }

    /// Plain-text 0/1 table, parameters as rows and objects as columns.
    /// Output is byte-stable for golden comparisons.
    pub fn render_table(&self) -> String {
        let mut widths = vec!["U"
            .len()
            .max(self.parameters.iter().map(|p| p.len()).max().unwrap_or(1))];
        for name in &self.universe {
            widths.push(name.len().max(1));
        }

        let mut out = String::new();
        let push_row = |cells: Vec<String>, out: &mut String| {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };

        let mut header = vec!["U".to_string()];
        header.extend(self.universe.iter().cloned());
        push_row(header, &mut out);
        for (p, parameter) in self.parameters.iter().enumerate() {
            let mut row = vec![parameter.clone()];
            row.extend(self.rows[p].iter().map(|cell| {
                if *cell {
                    "1".to_string()
                } else {
                    "0".to_string()
                }
            }));
            push_row(row, &mut out);
        }
        out
    }
}
