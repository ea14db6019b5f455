use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chambers::HyperplaneFamily;
use crate::error::Result;
use crate::principal::PrincipalElement;
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::weyl::{ElementId, WeylGroup, DEFAULT_WEYL_GUARD};

/// The flag variety `G/B` of a Cartan type together with everything the
/// classification needs: root data, the enumerated Weyl group, the principal
/// element and the hyperplane family.
///
/// Immutable after construction and `Sync`, so one value can be shared by
/// concurrent readers.
#[derive(Debug, Clone)]
pub struct FlagVariety {
    rs: RootSystem,
    weyl: WeylGroup,
    principal: PrincipalElement,
    /// Row `w` is the covector `lambda -> (w lambda)(h0)`.
    value_rows: Vec<Vec<i64>>,
    hyperplanes: HyperplaneFamily,
}

impl FlagVariety {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        Self::with_guard(cartan_type, DEFAULT_WEYL_GUARD)
    }

    pub fn with_guard(cartan_type: CartanType, weyl_guard: u128) -> Result<Self> {
        let rs = RootSystem::new(cartan_type)?;
        let weyl = WeylGroup::enumerate(&rs, weyl_guard)?;
        let principal = PrincipalElement::new(&rs)?;
        let n = rs.rank();
        let value_rows = weyl
            .elements()
            .iter()
            .map(|e| {
                (0..n)
                    .map(|col| {
                        (0..n)
                            .map(|row| principal.iota()[row] * e.action[row * n + col])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let mut fv = FlagVariety {
            rs,
            weyl,
            principal,
            value_rows,
            hyperplanes: HyperplaneFamily::default(),
        };
        fv.hyperplanes = HyperplaneFamily::build(&fv);
        Ok(fv)
    }

    pub fn parse(type_string: &str) -> Result<Self> {
        Self::new(type_string.parse()?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> &CartanType {
        self.rs.cartan_type()
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn principal(&self) -> &PrincipalElement {
        &self.principal
    }

    pub fn hyperplanes(&self) -> &HyperplaneFamily {
        &self.hyperplanes
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `dim X`, the number of positive roots.
    pub fn dim(&self) -> usize {
        self.rs.num_positive_roots()
    }

    /// The covector `lambda -> (w lambda)(h0)`.
    pub fn value_row(&self, w: ElementId) -> &[i64] {
        &self.value_rows[w]
    }

    /// `(w lambda)(h0)`; ranks are assumed to match.
    pub fn value(&self, w: ElementId, lambda: &Weight) -> i64 {
        self.value_rows[w]
            .iter()
            .zip(lambda.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn value_rational(&self, w: ElementId, lambda: &[BigRational]) -> BigRational {
        self.value_rows[w]
            .iter()
            .zip(lambda)
            .map(|(&a, b)| b * BigInt::from(a))
            .sum()
    }
}
