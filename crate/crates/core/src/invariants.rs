//! Degree, genus, Euler characteristic and self-linking identities.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::diagram::{bridge_params, BridgeParams, TorusDiagram};
use crate::error::{Error, Result};

/// Genus of a smooth degree-`d` plane curve, `(d−1)(d−2)/2`.
pub fn genus_expected(d: usize) -> Result<usize> {
    if d < 1 {
        return Err(Error::TooFewStrands { min: 1, got: d });
    }
    Ok((d - 1) * d.saturating_sub(2) / 2)
}

/// Euler characteristic of a smooth degree-`d` curve, `3d − d²`.
pub fn euler_expected(d: usize) -> i64 {
    let d = d as i64;
    3 * d - d * d
}

/// `c₁ + c₂ + c₃ − b = 3d − d²`.
pub fn euler_check(p: &BridgeParams, d: usize) -> bool {
    p.euler_characteristic() == euler_expected(d)
}

/// Self-linking number of the transverse closure: exponent sum minus strands.
pub fn transverse_sl(word: &BraidWord) -> i64 {
    word.exponent_sum() - word.strands() as i64
}

/// With `sl_λ = −c_λ`: `sl₁ + sl₂ + sl₃ = d² − 3d − b`.
pub fn sl_sum_check(p: &BridgeParams, d: usize) -> bool {
    let d = d as i64;
    let sl = -((p.c1 + p.c2 + p.c3) as i64);
    sl == d * d - 3 * d - p.b as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BennequinReport {
    /// `sl_λ ≤ −c_λ` for every λ.
    pub holds: bool,
    /// Whether each bound is attained.
    pub equalities: [bool; 3],
}

pub fn bennequin_check(p: &BridgeParams, sl: [i64; 3]) -> BennequinReport {
    let c = [p.c1 as i64, p.c2 as i64, p.c3 as i64];
    BennequinReport {
        holds: (0..3).all(|i| sl[i] <= -c[i]),
        equalities: [0, 1, 2].map(|i| sl[i] == -c[i]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantLedger {
    pub degree: usize,
    pub genus_expected: usize,
    pub euler_expected: i64,
    pub params: BridgeParams,
    pub baseline: BridgeParams,
    /// `sl₁` from the L₁ braid; `sl₂`, `sl₃` at their Bennequin values.
    pub sl: [i64; 3],
    pub smooth: bool,
    pub checks: BTreeMap<&'static str, bool>,
}

impl InvariantLedger {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

/// Collects every identity for a stabilized diagram. The genus and Euler
/// identities are only asserted when every L₂ component is an unknot.
pub fn ledger(diag: &TorusDiagram) -> Result<InvariantLedger> {
    let d = diag.strands();
    let params = bridge_params(diag)?;
    let smooth = crate::diagram::l2_is_smooth(diag);
    // with no A crossings the L₁ strands close up without braiding
    let l1 = BraidWord::identity(d);
    let sl = [transverse_sl(&l1), -(params.c2 as i64), -(params.c3 as i64)];
    let bennequin = bennequin_check(&params, sl);
    let mut checks = BTreeMap::new();
    checks.insert("sl1_from_braid", sl[0] == -(params.c1 as i64));
    checks.insert("bennequin_bound", bennequin.holds);
    checks.insert(
        "bennequin_equality",
        bennequin.equalities.iter().all(|&e| e),
    );
    let genus = genus_expected(d)?;
    if smooth {
        let chi = params.euler_characteristic();
        checks.insert("euler_characteristic", euler_check(&params, d));
        checks.insert("self_linking_sum", sl_sum_check(&params, d));
        checks.insert("genus", chi % 2 == 0 && 1 - chi / 2 == genus as i64);
    }
    Ok(InvariantLedger {
        degree: d,
        genus_expected: genus,
        euler_expected: euler_expected(d),
        baseline: params.baseline(),
        params,
        sl,
        smooth,
        checks,
    })
}
