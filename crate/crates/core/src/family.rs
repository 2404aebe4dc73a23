//! Graded families of monomial ideals: `I_0 = R` and `I_a I_b ⊆ I_{a+b}`.

use alloc::vec::Vec;

use crate::monomial::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `n ↦ I^n`
    Powers,
    /// `n ↦ (I^n)^sat`
    SaturatedPowers,
    /// `k ↦ ((I^m)^sat)^k`
    PowerThenSaturatePower { m: u32 },
    /// `k ↦ I^{mk}`
    FixedPower { m: u32 },
    /// `n ↦ R`
    ConstantUnit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFamilySpec {
    kind: FamilyKind,
    base: MonomialIdeal,
}

impl GradedFamilySpec {
    pub fn new(kind: FamilyKind, base: MonomialIdeal) -> Self {
        GradedFamilySpec { kind, base }
    }

    pub fn powers(base: MonomialIdeal) -> Self {
        Self::new(FamilyKind::Powers, base)
    }

    pub fn saturated_powers(base: MonomialIdeal) -> Self {
        Self::new(FamilyKind::SaturatedPowers, base)
    }

    pub fn constant_unit(dim: usize) -> Self {
        Self::new(FamilyKind::ConstantUnit, MonomialIdeal::unit(dim))
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// The ideal in degree `n`.
    pub fn ideal_at(&self, n: u32) -> MonomialIdeal {
        let dim = self.base.dim();
        if n == 0 {
            return MonomialIdeal::unit(dim);
        }
        match self.kind {
            FamilyKind::Powers => self.base.power(n),
            FamilyKind::SaturatedPowers => self.base.power(n).saturate(),
            FamilyKind::PowerThenSaturatePower { m } => self.base.power(m).saturate().power(n),
            FamilyKind::FixedPower { m } => self.base.power(m * n),
            FamilyKind::ConstantUnit => MonomialIdeal::unit(dim),
        }
    }

    /// Degrees `0..=n`, sharing the power computations.
    pub fn ideals_up_to(&self, n: u32) -> Vec<MonomialIdeal> {
        match self.kind {
            FamilyKind::Powers => self.base.powers_up_to(n),
            FamilyKind::SaturatedPowers => {
                let mut v = self.base.powers_up_to(n);
                for i in v.iter_mut() {
                    *i = i.saturate();
                }
                v
            }
            FamilyKind::PowerThenSaturatePower { m } => self.base.power(m).saturate().powers_up_to(n),
            FamilyKind::FixedPower { m } => self.base.power(m).powers_up_to(n),
            FamilyKind::ConstantUnit => (0..=n).map(|_| MonomialIdeal::unit(self.base.dim())).collect(),
        }
    }
}
