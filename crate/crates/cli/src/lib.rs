//! Library surface of the command-line harness: complex expressions,
//! statistics rows, identity suites, and the gamma-witness search.

pub mod families;
pub mod report;
pub mod suites;

use flagcomb::complex::SimplicialComplex;
use flagcomb::poly::SymmetricHVector;
use flagcomb::{compressed_complex, find_balanced_coloring, is_f_vector, FVector};
use serde::Serialize;

pub use families::{parse_complex, SpecError};
pub use report::{CaseReport, SuiteReport, Verdict};
pub use suites::{
    gamma_to_g_expansion_check, kk_bruteforce_agreement, run_suite, SuiteConfig, SuiteError,
    SUITE_NAMES,
};

/// One statistics row of the `stats` subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct StatsRow {
    pub name: String,
    pub d: usize,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub gamma: Option<Vec<i64>>,
    pub g_coeffs: Option<Vec<i64>>,
    pub p_coeffs: Option<Vec<i64>>,
}

pub fn stats_row(name: &str, c: &SimplicialComplex) -> StatsRow {
    let f = c.f_vector();
    let h = f.h_vector();
    let sym = SymmetricHVector::new(h.clone()).ok();
    StatsRow {
        name: name.to_string(),
        d: f.len() - 1,
        f: f.0.clone(),
        h,
        gamma: sym.as_ref().map(|s| s.gamma_vector()),
        g_coeffs: sym.as_ref().and_then(|s| s.g_poly().to_int_coeffs()),
        p_coeffs: sym.as_ref().and_then(|s| s.p_poly().to_int_coeffs()),
    }
}

fn csv_cell<T: std::fmt::Display>(xs: &[T]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("\"{}\"", inner.join(","))
}

/// CSV with columns name, d, f, h, gamma, g-coeffs, P-coeffs.
pub fn stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from("name,d,f,h,gamma,g_coeffs,p_coeffs\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.name,
            r.d,
            csv_cell(&r.f),
            csv_cell(&r.h),
            r.gamma.as_deref().map_or(String::new(), csv_cell),
            r.g_coeffs.as_deref().map_or(String::new(), csv_cell),
            r.p_coeffs.as_deref().map_or(String::new(), csv_cell),
        ));
    }
    out
}

/// Result of searching for complexes whose f-vector realizes a reading of
/// the h-vector of the input sphere.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub input: String,
    pub h: Vec<i64>,
    pub readings: Vec<WitnessReading>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReading {
    pub reading: String,
    pub target_f: Vec<u64>,
    pub is_f_vector: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SimplicialComplex>,
    pub balanced_colorable: Option<bool>,
    pub num_colors: Option<u32>,
}

pub fn search_gamma_witness(
    name: &str,
    c: &SimplicialComplex,
    max_n: u32,
) -> Result<WitnessReport, String> {
    let h = SymmetricHVector::from_complex(c).map_err(|e| e.to_string())?;
    let m = h.degree() / 2;
    let hs = h.entries();
    let candidates = vec![
        (
            "truncated".to_string(),
            hs[..=m].iter().map(|&x| x as u64).collect::<Vec<u64>>(),
        ),
        ("full".to_string(), hs.iter().map(|&x| x as u64).collect()),
        (
            "gamma".to_string(),
            h.gamma_vector().iter().map(|&x| x as u64).collect(),
        ),
    ];
    let mut readings = Vec::new();
    for (reading, target) in candidates {
        let valid = is_f_vector(&target);
        let witness = if valid && target.get(1).copied().unwrap_or(0) <= max_n as u64 {
            compressed_complex(&FVector(target.clone())).ok()
        } else {
            None
        };
        let coloring = witness.as_ref().map(find_balanced_coloring);
        readings.push(WitnessReading {
            reading,
            target_f: target,
            is_f_vector: valid,
            balanced_colorable: coloring.as_ref().map(|c| c.is_some()),
            num_colors: coloring.flatten().map(|c| c.num_colors()),
            witness,
        });
    }
    Ok(WitnessReport { input: name.to_string(), h: hs.to_vec(), readings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_row_for_c5() {
        let c = parse_complex("cycle:5").unwrap();
        let row = stats_row("cycle:5", &c);
        assert_eq!(row.f, vec![1, 5, 5]);
        assert_eq!(row.h, vec![1, 3, 1]);
        assert_eq!(row.gamma, Some(vec![1, 1]));
        assert_eq!(row.g_coeffs, Some(vec![3, 1]));
        assert_eq!(row.p_coeffs, Some(vec![3, 2]));
        let csv = stats_csv(&[row]);
        assert!(csv.contains("cycle:5,2,\"1,5,5\",\"1,3,1\",\"1,1\",\"3,1\",\"3,2\""));
    }

    #[test]
    fn witness_search_c5() {
        let c = parse_complex("cycle:5").unwrap();
        let report = search_gamma_witness("cycle:5", &c, 6).unwrap();
        let trunc = &report.readings[0];
        assert!(trunc.is_f_vector);
        assert_eq!(trunc.target_f, vec![1, 3]);
        assert_eq!(trunc.balanced_colorable, Some(true));
        let full = &report.readings[1];
        assert!(full.is_f_vector);
        assert_eq!(full.target_f, vec![1, 3, 1]);
    }
}
