//! Deterministic text rendering of tables and certificate ledgers.

use clap::ValueEnum;

use sunseq_core::arith::{quad_to_decimal, quad_to_scientific};
use sunseq_core::{CertificateReport, QuadNumber, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Markdown,
    Csv,
}

/// Exact strings longer than this are abbreviated in plain and markdown
/// output; csv always carries the full value.
const ABBREVIATE_OVER: usize = 200;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Markdown => self.markdown(),
            Format::Csv => self.csv(),
        }
    }

    fn plain(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| abbreviate(c)).collect())
            .collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.headers[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |row: &[String]| {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        out.push_str(&line(&self.headers));
        for r in &cells {
            out.push_str(&line(r));
        }
        out
    }

    fn markdown(&self) -> String {
        let esc = |s: &str| abbreviate(s).replace('|', "\\|");
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("### {}\n\n", self.title));
        }
        let row = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
        out.push_str(&row(self.headers.iter().map(|h| esc(h)).collect()));
        out.push_str(&row(self
            .headers
            .iter()
            .map(|_| "---".to_string())
            .collect()));
        for r in &self.rows {
            out.push_str(&row(r.iter().map(|c| esc(c)).collect()));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory csv write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush"))
            .expect("csv output is utf-8")
    }
}

fn abbreviate(s: &str) -> String {
    let n = s.chars().count();
    if n <= ABBREVIATE_OVER {
        return s.to_string();
    }
    let head: String = s.chars().take(24).collect();
    let tail: String = s.chars().skip(n - 24).collect();
    format!("{head}...{tail} ({n} chars)")
}

/// Six significant digits; scientific notation outside `[1e-3, 1e6)`.
pub fn quad_display(x: &QuadNumber) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let sci = quad_to_scientific(x, 6);
    let exp: i64 = sci
        .rsplit_once('e')
        .map_or(0, |(_, e)| e.parse().unwrap_or(0));
    if !(-3..6).contains(&exp) {
        return sci;
    }
    let places = (5 - exp).max(0) as u32;
    trim_zeros(quad_to_decimal(x, places))
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Decimal rendering of a witness; empty for polynomials.
pub fn witness_decimal(w: &Witness) -> String {
    match w {
        Witness::List(items) => items
            .iter()
            .map(witness_decimal)
            .collect::<Vec<_>>()
            .join("; "),
        Witness::Polynomial(_) => String::new(),
        other => other.value().map(|v| quad_display(&v)).unwrap_or_default(),
    }
}

/// One row per step; an empty report renders as the header alone.
pub fn report_table(report: &CertificateReport) -> Table {
    let mut t = Table::new(
        format!("{} ({})", report.claim, report.status),
        &[
            "step",
            "claim",
            "description",
            "anchor",
            "status",
            "witness",
            "decimal",
        ],
    );
    for (i, s) in report.steps.iter().enumerate() {
        t.push(vec![
            (i + 1).to_string(),
            s.claim.clone(),
            s.description.clone(),
            s.anchor.clone(),
            s.status.to_string(),
            s.witness.exact(),
            witness_decimal(&s.witness),
        ]);
    }
    t
}

pub fn render_report(report: &CertificateReport, format: Format) -> String {
    report_table(report).render(format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sunseq_core::StepStatus;

    #[test]
    fn decimal_witness_ranges() {
        assert_eq!(
            quad_display(&QuadNumber::from_ints(-157980000, 0)),
            "-1.5798e8"
        );
        assert_eq!(quad_display(&QuadNumber::from_ints(3, 2)), "5.82843");
        assert_eq!(quad_display(&QuadNumber::from_ints(999_999, 0)), "999999");
        assert_eq!(quad_display(&QuadNumber::from_ints(1_000_000, 0)), "1e6");
        let tiny = QuadNumber::from_rational(sunseq_core::arith::rat(1, 10_000));
        assert_eq!(quad_display(&tiny), "1e-4");
        let small = QuadNumber::from_rational(sunseq_core::arith::rat(1, 1000));
        assert_eq!(quad_display(&small), "0.001");
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = CertificateReport::new("nothing");
        assert_eq!(render_report(&r, Format::Plain).lines().count(), 2);
        assert_eq!(
            render_report(&r, Format::Csv),
            "step,claim,description,anchor,status,witness,decimal\n"
        );
        assert_eq!(
            render_report(&r, Format::Markdown)
                .lines()
                .filter(|l| l.starts_with('|'))
                .count(),
            2
        );
    }

    #[test]
    fn witnesses_exact_and_decimal() {
        let mut r = CertificateReport::new("demo");
        r.push(
            "value at k=3",
            "upper defect",
            StepStatus::Certified,
            QuadNumber::from_ints(-13941, -9984),
        );
        let csv = render_report(&r, Format::Csv);
        assert!(csv.contains("-3(4647+3328√2)"), "{csv}");
        assert!(csv.contains("-28060.5"), "{csv}");
        let md = render_report(&r, Format::Markdown);
        assert!(
            md.contains("| 1 | demo | value at k=3 | upper defect | certified |"),
            "{md}"
        );
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new("", &["a", "b"]);
        t.push(vec!["1, 2".into(), "x".into()]);
        assert_eq!(t.render(Format::Csv), "a,b\n\"1, 2\",x\n");
    }

    #[test]
    fn long_values_abbreviated_outside_csv() {
        let mut t = Table::new("", &["v"]);
        let long = "7".repeat(500);
        t.push(vec![long.clone()]);
        assert!(t.render(Format::Plain).contains("(500 chars)"));
        assert!(t.render(Format::Csv).contains(&long));
    }
}
