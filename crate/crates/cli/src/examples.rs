//! Bundled example scripts.

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

pub const EXAMPLES: &[Example] = &[
    Example { name: "operators", summary: "Noetherian operators of primary ideals at the origin", source: include_str!("../scripts/operators.nth") },
    Example { name: "cubic_cone", summary: "new differential powers on the Fermat cubic cone", source: include_str!("../scripts/cubic_cone.nth") },
    Example { name: "inseparable_f2", summary: "inseparable prime x^2 - t over Fp(2)(t)", source: include_str!("../scripts/inseparable_f2.nth") },
    Example { name: "inseparable_f3", summary: "inseparable prime x^3 - t over Fp(3)(t)", source: include_str!("../scripts/inseparable_f3.nth") },
    Example { name: "separable", summary: "separable prime x^2 - 2 over QQ", source: include_str!("../scripts/separable.nth") },
    Example { name: "smooth", summary: "all powers of a smooth point agree", source: include_str!("../scripts/smooth.nth") },
    Example { name: "twisted_cubic", summary: "symbolic and classical squares of the twisted cubic", source: include_str!("../scripts/twisted_cubic.nth") },
];

pub fn find(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::run;
    use crate::script::parse_script;

    #[test]
    fn every_example_runs_clean() {
        for ex in EXAMPLES {
            let script = parse_script(ex.source).unwrap_or_else(|e| panic!("{}: {e}", ex.name));
            let report = run(&script);
            assert_eq!(report.exit_code, 0, "{}: {report:#?}", ex.name);
        }
    }
}
