//! Finds a witness inside every smooth cone and checks that its regular
//! subdivision has the advertised cycle.

use tropical_cubic::classify::SMOOTH_CONES;
use tropical_cubic::numeric::ExtRational;
use tropical_cubic::oracle::{fm_feasible, FeasibilityResult, LinearRow, MixedLinearSystem};
use tropical_cubic::{classify_by_subdivision, CurveClass, SymmetricCubicValuations};

fn main() -> tropical_cubic::Result<()> {
    for cone in &SMOOTH_CONES {
        let mut sys =
            MixedLinearSystem::new(["v12", "v34", "v5", "v67", "v8"].map(String::from).to_vec());
        for c in &cone.conditions {
            sys.push(LinearRow::from_ints(&c.form.0, c.relation, 0));
        }
        let conditions: Vec<String> = cone.conditions.iter().map(ToString::to_string).collect();
        match fm_feasible(&sys)? {
            FeasibilityResult::Feasible(w) => {
                let values: Vec<ExtRational> = w.into_iter().map(ExtRational::Finite).collect();
                let v =
                    SymmetricCubicValuations::from_ext(values.try_into().expect("five values"))?;
                println!(
                    "{:<16} {:<48} witness {v} -> {}",
                    CurveClass::from(cone.class).to_string(),
                    conditions.join(", "),
                    classify_by_subdivision(&v)?
                );
            }
            FeasibilityResult::Infeasible => {
                println!("{}: empty cone", CurveClass::from(cone.class))
            }
        }
    }
    Ok(())
}
