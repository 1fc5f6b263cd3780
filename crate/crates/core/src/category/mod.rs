//! The combinatorial skeleton of a fusion category: fusion coefficients,
//! duality, pivotal dimensions and optional modular data.
//!
//! [`CategoryData`] is plain, possibly invalid input. [`Category`] is the
//! validated form every algorithm in this crate consumes; it caches the dual
//! involution, the global dimension and (lazily) the conjugacy data.

mod catalog;
mod io;
mod validate;
mod verlinde;

use std::sync::OnceLock;

use num_traits::Zero;

pub use catalog::{catalog_data, catalog_get, CATALOG_NAMES};
pub use io::{decode_value, encode_value, from_json_str, load, save, to_json_string};
pub use validate::validate;
pub use verlinde::verlinde_fusion;

use crate::character::ConjugacyData;
use crate::check::all_passed;
use crate::cyclotomic::{CycloMatrix, Cyclotomic};
use crate::error::{Error, Result};

/// Fusion coefficients `N_ij^k`, stored flat in `i, j, k` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    fusion: Vec<u32>,
}

impl FusionRing {
    pub fn new(labels: Vec<String>, tensor: &[Vec<Vec<u32>>]) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::MalformedFusion("rank must be positive".into()));
        }
        if tensor.len() != r || tensor.iter().any(|m| m.len() != r || m.iter().any(|v| v.len() != r)) {
            return Err(Error::MalformedFusion(format!(
                "fusion tensor must have shape {r}x{r}x{r}"
            )));
        }
        let fusion = tensor.iter().flatten().flatten().copied().collect();
        Ok(FusionRing { labels, fusion })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `N_ij^k`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.fusion[(i * r + j) * r + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: u32) {
        let r = self.rank();
        self.fusion[(i * r + j) * r + k] = value;
    }

    /// Simple constituents of `V_i ⊗ V_j`.
    pub fn support(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&k| self.n(i, j, k) > 0)
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect())
            .collect()
    }

    /// The involution `i ↦ i*`, read off from `N_ij^0 = δ_{j,i*}`.
    pub fn dual_involution(&self) -> Result<Vec<usize>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let hits: Vec<usize> = (0..r).filter(|&j| self.n(i, j, 0) > 0).collect();
                match hits.as_slice() {
                    [j] if self.n(i, *j, 0) == 1 => Ok(*j),
                    [] => Err(Error::MalformedFusion(format!(
                        "object {} has no dual",
                        self.labels[i]
                    ))),
                    _ => Err(Error::MalformedFusion(format!(
                        "object {} has no unique dual (N_{{{},j}}^0 = {:?})",
                        self.labels[i],
                        self.labels[i],
                        (0..r).map(|j| self.n(i, j, 0)).collect::<Vec<_>>()
                    ))),
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotalData {
    pub dims: Vec<Cyclotomic>,
}

/// Unnormalized S-matrix (`s_00 = 1`, `s_0i = d_i`) and optional twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    pub s_matrix: CycloMatrix,
    pub twists: Option<Vec<Cyclotomic>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Modular,
    FusionRing,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Modular => "modular",
            Kind::FusionRing => "fusion_ring",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryData {
    pub name: String,
    /// Every value lives in `Q(ζ_conductor)`.
    pub conductor: u32,
    pub ring: FusionRing,
    pub pivotal: PivotalData,
    pub modular: Option<ModularData>,
    /// `α_ij` with rows indexed by simples and columns by idempotents.
    pub char_table: Option<CycloMatrix>,
}

impl CategoryData {
    /// Modular input: dimensions are row 0 of `s`, fusion comes from Verlinde.
    pub fn from_modular(
        name: impl Into<String>,
        conductor: u32,
        labels: Vec<String>,
        s_matrix: CycloMatrix,
        twists: Option<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        if !s_matrix.is_square() || s_matrix.rows() != labels.len() {
            return Err(Error::MalformedFusion(format!(
                "s_matrix must be {0}x{0}",
                labels.len()
            )));
        }
        let tensor = verlinde_fusion(&s_matrix)?;
        let ring = FusionRing::new(labels, &tensor)?;
        let dims = s_matrix.row(0).to_vec();
        Ok(CategoryData {
            name: name.into(),
            conductor,
            ring,
            pivotal: PivotalData { dims },
            modular: Some(ModularData { s_matrix, twists }),
            char_table: None,
        })
    }

    pub fn from_fusion_ring(
        name: impl Into<String>,
        conductor: u32,
        ring: FusionRing,
        dims: Vec<Cyclotomic>,
        char_table: Option<CycloMatrix>,
    ) -> Self {
        CategoryData {
            name: name.into(),
            conductor,
            ring,
            pivotal: PivotalData { dims },
            modular: None,
            char_table,
        }
    }

    pub fn kind(&self) -> Kind {
        if self.modular.is_some() {
            Kind::Modular
        } else {
            Kind::FusionRing
        }
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    /// `dim(C) = Σ_i d_i d_{i*}`.
    pub fn global_dim(&self) -> Result<Cyclotomic> {
        let dual = self.ring.dual_involution()?;
        let d = &self.pivotal.dims;
        let total: Cyclotomic = (0..self.rank()).map(|i| &d[i] * &d[dual[i]]).sum();
        if total.is_zero() {
            return Err(Error::Degenerate("global dimension is zero".into()));
        }
        Ok(total)
    }
}

/// Validated category with cached derived data.
#[derive(Debug)]
pub struct Category {
    data: CategoryData,
    dual: Vec<usize>,
    global_dim: Cyclotomic,
    inv_dims: Vec<Cyclotomic>,
    inv_global_dim: Cyclotomic,
    conjugacy: OnceLock<std::result::Result<ConjugacyData, String>>,
}

impl Category {
    /// Validates `data`; any failed check rejects it.
    pub fn new(data: CategoryData) -> Result<Self> {
        let report = validate(&data);
        if !all_passed(&report) {
            return Err(Error::Invalid(report));
        }
        Self::new_unchecked(data)
    }

    /// Skips validation; only a dual involution and nonzero dimensions are
    /// required. Meant for diagnosing corrupted data with the identity suites.
    pub fn new_unchecked(data: CategoryData) -> Result<Self> {
        if data.pivotal.dims.len() != data.rank() {
            return Err(Error::MalformedFusion("one dimension per simple is required".into()));
        }
        let dual = data.ring.dual_involution()?;
        let global_dim = data.global_dim()?;
        let inv_dims = data
            .pivotal
            .dims
            .iter()
            .map(|d| d.inv().map_err(|_| Error::Degenerate("a simple has zero dimension".into())))
            .collect::<Result<_>>()?;
        let inv_global_dim = global_dim.inv()?;
        Ok(Category {
            data,
            dual,
            global_dim,
            inv_dims,
            inv_global_dim,
            conjugacy: OnceLock::new(),
        })
    }

    pub fn data(&self) -> &CategoryData {
        &self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn ring(&self) -> &FusionRing {
        &self.data.ring
    }

    pub fn labels(&self) -> &[String] {
        self.data.ring.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        self.data.ring.label(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.data.ring.index_of(label)
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data.ring.n(i, j, k)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn dim(&self, i: usize) -> &Cyclotomic {
        &self.data.pivotal.dims[i]
    }

    pub fn dims(&self) -> &[Cyclotomic] {
        &self.data.pivotal.dims
    }

    pub fn global_dim(&self) -> &Cyclotomic {
        &self.global_dim
    }

    /// `1/d_i`.
    pub fn inv_dim(&self, i: usize) -> &Cyclotomic {
        &self.inv_dims[i]
    }

    /// `1/dim C`.
    pub fn inv_global_dim(&self) -> &Cyclotomic {
        &self.inv_global_dim
    }

    pub fn is_modular(&self) -> bool {
        self.data.modular.is_some()
    }

    pub fn modular(&self) -> Option<&ModularData> {
        self.data.modular.as_ref()
    }

    /// The S-matrix, or a capability error naming `what` needed it.
    pub fn s_matrix(&self, what: &str) -> Result<&CycloMatrix> {
        self.data
            .modular
            .as_ref()
            .map(|m| &m.s_matrix)
            .ok_or_else(|| Error::needs_modular(what))
    }

    pub(crate) fn conjugacy_cache(&self) -> &OnceLock<std::result::Result<ConjugacyData, String>> {
        &self.conjugacy
    }

    /// All simples have positive rational-integer dimension.
    pub fn is_integral(&self) -> bool {
        self.dims().iter().all(|d| {
            d.to_integer()
                .is_some_and(|k| k > num_bigint::BigInt::zero())
        })
    }
}

impl Clone for Category {
    fn clone(&self) -> Self {
        Category {
            data: self.data.clone(),
            dual: self.dual.clone(),
            global_dim: self.global_dim.clone(),
            inv_dims: self.inv_dims.clone(),
            inv_global_dim: self.inv_global_dim.clone(),
            conjugacy: self.conjugacy.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_involutions() {
        let toric = catalog_get("toric_code").unwrap();
        assert_eq!(toric.duals(), &[0, 1, 2, 3]);
        let z3 = catalog_get("vec_z3").unwrap();
        assert_eq!(z3.duals(), &[0, 2, 1]);
        for name in CATALOG_NAMES {
            assert_eq!(catalog_get(name).unwrap().dual(0), 0, "{name}");
        }
    }

    #[test]
    fn dual_requires_unique_partner() {
        let ring = FusionRing::new(
            vec!["1".into(), "x".into()],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![2, 0]]],
        )
        .unwrap();
        assert!(matches!(ring.dual_involution(), Err(Error::MalformedFusion(_))));
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(*catalog_get("toric_code").unwrap().global_dim(), Cyclotomic::from_int(4));
        let g = -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3));
        assert_eq!(
            *catalog_get("fibonacci").unwrap().global_dim(),
            &Cyclotomic::from_int(2) + &g
        );
        assert_eq!(*catalog_get("trivial").unwrap().global_dim(), Cyclotomic::from_int(1));
    }

    #[test]
    fn zero_global_dimension_is_degenerate() {
        let ring = FusionRing::new(
            vec!["1".into(), "x".into()],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]],
        )
        .unwrap();
        // d_x = i gives 1 + i² = 0.
        let data = CategoryData::from_fusion_ring(
            "bad",
            4,
            ring,
            vec![Cyclotomic::from_int(1), Cyclotomic::zeta(4)],
            None,
        );
        assert!(matches!(data.global_dim(), Err(Error::Degenerate(_))));
    }
}
