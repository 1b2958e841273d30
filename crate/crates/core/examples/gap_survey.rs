//! Records how many atoms beyond the rank each swept monoid has.

use valuate::families::{survey_gap, SurveySpec};
use valuate::valuation::SearchCaps;

fn main() -> valuate::Result<()> {
    let spec = SurveySpec {
        degrees: 2..=4,
        primes: 2..=3,
        coeff_bound: 1,
    };
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = survey_gap(&spec, &SearchCaps::default(), jobs)?;
    print!("{}", valuate::cli::render_survey(&report));
    Ok(())
}
