//! Exploratory measurement of where `N(Sym_n(T), r)` is attained.
//!
//! The expectation under test is that for `n >= 2r + 1` a 3-cycle `π`
//! attains the maximum, i.e. `N(Sym_n(T), r) = |B_r(e) ∩ B_r(π)|`. Its
//! published form also equates this with `N_2(Sym_n(T), 2)`, which only
//! makes sense when `r = 2`; both the literal and the `N_2(·, r)` readings
//! are reported. Nothing here is asserted.

use serde::Serialize;

use crate::cayley::{CayleyGraph, NsValue};
use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::generators::GeneratorKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    /// Always `"probe"`: these values are observations, not checks.
    pub label: &'static str,
    pub n: usize,
    pub r: usize,
    /// `N(Sym_n(T), r)`.
    pub value: u64,
    /// Every `s` attaining the maximum with its attaining classes.
    pub attained: Vec<NsValue>,
    pub three_cycle_class: CycleType,
    /// `|B_r(e) ∩ B_r(π)|` for a 3-cycle `π`.
    pub three_cycle_overlap: u64,
    pub three_cycle_attains: bool,
    /// `N_2(Sym_n(T), 2)`, the literal reading.
    pub n2_at_radius_2: u64,
    /// `N_2(Sym_n(T), r)`, the amended reading.
    pub n2_at_radius_r: u64,
    pub literal_reading_holds: bool,
    pub amended_reading_holds: bool,
}

pub fn probe(g: &CayleyGraph, r: usize) -> Result<ProbeReport> {
    let n = g.degree();
    if g.kind() != GeneratorKind::AllTranspositions {
        return Err(Error::Domain("the probe concerns the all-transpositions graph".into()));
    }
    if r == 0 || n < 2 * r + 1 {
        return Err(Error::Domain(format!("need r >= 1 and n >= 2r+1, got n={n} r={r}")));
    }
    let nv = g.n_value(r)?;
    let three = CycleType::from_counts(vec![(n - 3) as u32, 0, 1])?;
    let overlap = g.identity_overlap(&three.representative(), r)?;
    let n2 = |radius: usize| -> Result<u64> { Ok(g.n_s_value(radius, 2)?.map(|v| v.value).unwrap_or(0)) };
    let (n2_at_2, n2_at_r) = (n2(2)?, n2(r)?);
    Ok(ProbeReport {
        label: "probe",
        n,
        r,
        value: nv.value,
        three_cycle_class: three,
        three_cycle_overlap: overlap,
        three_cycle_attains: overlap == nv.value,
        n2_at_radius_2: n2_at_2,
        n2_at_radius_r: n2_at_r,
        literal_reading_holds: nv.value == n2_at_2 && n2_at_2 == overlap,
        amended_reading_holds: nv.value == n2_at_r && n2_at_r == overlap,
        attained: nv.attained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::Witness;

    fn t(n: usize) -> CayleyGraph {
        CayleyGraph::named(GeneratorKind::AllTranspositions, n).unwrap()
    }

    #[test]
    fn radius_two_degree_five() {
        let rep = probe(&t(5), 2).unwrap();
        assert_eq!(rep.value, 27);
        assert_eq!(rep.three_cycle_class.to_string(), "1^2 3^1");
        assert!(rep.three_cycle_attains);
        assert_eq!(rep.attained.len(), 1);
        assert_eq!(rep.attained[0].s, 2);
        assert_eq!(
            rep.attained[0].witnesses,
            vec![Witness::Class(rep.three_cycle_class.clone())]
        );
        assert!(rep.literal_reading_holds && rep.amended_reading_holds);
    }

    #[test]
    fn radius_one_degree_three() {
        let rep = probe(&t(3), 1).unwrap();
        assert_eq!(rep.value, 3);
        assert!(rep.three_cycle_attains);
        assert_eq!(rep.n2_at_radius_r, 3);
    }

    #[test]
    fn rejects_small_degree() {
        assert!(probe(&t(4), 2).is_err());
        let g = CayleyGraph::named(GeneratorKind::Adjacent, 5).unwrap();
        assert!(probe(&g, 2).is_err());
    }
}
