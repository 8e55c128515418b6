//! Local invariants of singular points under Kummer covers, and the pairwise-average cubic.

use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Point on one coordinate axis (type 1) or at the origin of two axes (type 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum PointType {
    Origin,
    Axis,
}

impl TryFrom<u8> for PointType {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(PointType::Origin),
            1 => Ok(PointType::Axis),
            _ => Err(Error::invalid(format!("point type must be 0 or 1, got {v}"))),
        }
    }
}

impl From<PointType> for u8 {
    fn from(t: PointType) -> u8 {
        match t {
            PointType::Origin => 0,
            PointType::Axis => 1,
        }
    }
}

/// Local branch: Milnor number and intersection multiplicities with the axes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub milnor: u64,
    pub axis1: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis2: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalPointData {
    pub point_type: PointType,
    pub milnor: u64,
    pub branches: Vec<Branch>,
    /// Symmetric matrix of pairwise intersection numbers; the diagonal is ignored.
    #[serde(default)]
    pub intersections: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedBranch {
    pub milnor: u64,
    pub axis1: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis2: Option<u64>,
    /// Number of irreducible components of the preimage.
    pub components: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedPointData {
    pub milnor: u64,
    pub branches: Vec<LiftedBranch>,
    pub intersections: Vec<Vec<u64>>,
}

impl LocalPointData {
    fn validate(&self, expected: PointType) -> Result<()> {
        if self.point_type != expected {
            return Err(Error::invalid(format!(
                "expected a type {} point",
                u8::from(expected)
            )));
        }
        for (i, b) in self.branches.iter().enumerate() {
            if b.axis1 == 0 {
                return Err(Error::invalid(format!("branch {}: axis multiplicity must be positive", i + 1)));
            }
            match (expected, b.axis2) {
                (PointType::Axis, Some(_)) => {
                    return Err(Error::invalid(format!("branch {}: type 1 points have one axis", i + 1)))
                }
                (PointType::Origin, None) | (PointType::Origin, Some(0)) => {
                    return Err(Error::invalid(format!("branch {}: type 0 points need both axes", i + 1)))
                }
                _ => {}
            }
        }
        let r = self.branches.len();
        if !self.intersections.is_empty() {
            if self.intersections.len() != r || self.intersections.iter().any(|row| row.len() != r) {
                return Err(Error::invalid(format!("intersection matrix must be {r}x{r}")));
            }
            for i in 0..r {
                for j in 0..i {
                    if self.intersections[i][j] != self.intersections[j][i] {
                        return Err(Error::invalid("intersection matrix must be symmetric"));
                    }
                }
            }
        }
        Ok(())
    }

    fn scaled_intersections(&self, factor: u64) -> Vec<Vec<u64>> {
        self.intersections
            .iter()
            .map(|row| row.iter().map(|x| x * factor).collect())
            .collect()
    }
}

/// Cover of degree `n` ramified along the axis through a type 1 point.
pub fn transform_type1(n: u64, data: &LocalPointData) -> Result<LiftedPointData> {
    data.validate(PointType::Axis)?;
    check_degree(n)?;
    let m: u64 = data.branches.iter().map(|b| b.axis1).sum();
    let branches = data
        .branches
        .iter()
        .map(|b| LiftedBranch {
            milnor: n * b.milnor + (b.axis1 - 1) * (n - 1),
            axis1: b.axis1,
            axis2: None,
            components: n.gcd(&b.axis1),
        })
        .collect();
    Ok(LiftedPointData {
        milnor: n * data.milnor + (m.max(1) - 1) * (n - 1),
        branches,
        intersections: data.scaled_intersections(n),
    })
}

/// Cover of degree `n` in both coordinates at a type 0 point.
///
/// The point's Milnor number uses the closed formula in the axis multiplicities; the per-branch
/// values use the branch formula. For a single smooth branch the two disagree.
pub fn transform_type0(n: u64, data: &LocalPointData) -> Result<LiftedPointData> {
    data.validate(PointType::Origin)?;
    check_degree(n)?;
    let m1: u64 = data.branches.iter().map(|b| b.axis1).sum();
    let m2: u64 = data.branches.iter().map(|b| b.axis2.unwrap_or(0)).sum();
    let branches = data
        .branches
        .iter()
        .map(|b| {
            let b2 = b.axis2.unwrap_or(0);
            LiftedBranch {
                milnor: n * n * b.milnor + (n - 1) * (n * (b.axis1 + b2 - 1) - 1),
                axis1: n * b.axis1,
                axis2: Some(n * b2),
                components: n * n.gcd(&b.axis1).gcd(&b2),
            }
        })
        .collect();
    let milnor = if data.branches.is_empty() {
        n * n * data.milnor
    } else {
        n * n * data.milnor + (n - 1) * (n * (m1 + m2) - 1)
    };
    Ok(LiftedPointData { milnor, branches, intersections: data.scaled_intersections(n * n) })
}

fn check_degree(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("cover degree must be positive"));
    }
    Ok(())
}

/// Coefficients `(b1, b2, b3)` of `q(y) = y^3 - b1 y^2 + b2 y - b3`, whose roots are the pairwise
/// averages of the roots of `y^3 - a1 y^2 + a2 y - a3`.
pub fn real_part_cubic(
    a1: &BigRational,
    a2: &BigRational,
    a3: &BigRational,
) -> (BigRational, BigRational, BigRational) {
    let four = BigRational::from_integer(4.into());
    let eight = BigRational::from_integer(8.into());
    let b2 = (a1 * a1 + a2) / four;
    let b3 = (a1 * a2 - a3) / eight;
    (a1.clone(), b2, b3)
}
