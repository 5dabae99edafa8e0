//! Text and CSV rendering shared by the command-line tool and the demo.

use std::fmt::Write as _;

use crate::partition::EdgePartition;
use crate::verify::VerificationReport;

pub const REPORT_CSV_HEADER: &str = "family,kind,n,variant,oracle,closed,rel_error,pass";

/// Formats `x` with `digits` significant digits, like C's `%.*g`.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // Round through scientific notation first so the exponent reflects
    // carries such as 9.9999 -> 10.000.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_fraction(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_fraction(&format!("{x:.decimals$}")).to_string()
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// 12 significant digits.
pub fn sig12(x: f64) -> String {
    format_sig(x, 12)
}

pub fn report_csv(report: &VerificationReport) -> String {
    let mut out = String::from(REPORT_CSV_HEADER);
    out.push('\n');
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            e.family,
            e.kind,
            e.n,
            e.variant,
            sig12(e.oracle_value),
            sig12(e.closed_value),
            sig12(e.rel_error),
            e.pass
        );
    }
    out
}

pub fn partition_csv(partition: &EdgePartition) -> String {
    let mut out = String::from("lo,hi,count\n");
    for row in partition.rows() {
        let _ = writeln!(out, "{},{},{}", row.lo, row.hi, row.count);
    }
    out
}

/// Aligned table; keys are unordered, so `E(9,8)` and `E(8,9)` name the same class.
pub fn partition_text(partition: &EdgePartition) -> String {
    let mut out = format!(
        "# {} partition, {} edges; E(a,b) = E(b,a), listed with a <= b\n",
        partition.labeling(),
        partition.total_edges()
    );
    for (key, count) in partition.iter() {
        let _ = writeln!(out, "{:<16} {count}", key.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig12(26.242640687119284), "26.2426406871");
        assert_eq!(sig12(3.0), "3");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.5e-17), "1.5e-17");
        assert_eq!(sig12(-0.00012345), "-0.00012345");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_sig(9.99999, 3), "10");
        assert_eq!(format_sig(999.9, 3), "1e3");
    }

    #[test]
    fn partition_rendering() {
        let g = crate::generators::double_wheel(5).unwrap();
        let p = crate::partition::degree_partition(&g);
        assert_eq!(partition_csv(&p), "lo,hi,count\n3,3,10\n3,10,10\n");
        assert!(partition_text(&p).contains("E(3,10)"));
    }
}
