use serde_json::json;

use super::Format;
use crate::arith::{rat_latex, rat_to_string, BigRat, QPoly, QRat};
use crate::series::ZPoly;
use crate::verify::{Params, VerifyReport, Witness};

fn coeff_cell(p: &QPoly) -> String {
    p.to_strings().join(";")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn qrat_json(x: &QRat) -> String {
    serde_json::to_string(x).expect("QRat serializes")
}

/// One value of Q(q), labelled with its index for the CSV form.
pub fn value(n: u32, x: &QRat, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", qrat_json(x)),
        Format::Plain => format!("{}\n", x.render("q")),
        Format::Latex => format!("{}\n", x.render_latex("q")),
        Format::Csv => format!("n,num,den\n{n},{},{}\n", coeff_cell(x.num()), coeff_cell(x.den())),
    }
}

/// One specialized rational value.
pub fn rational(n: u32, x: &BigRat, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", json!(rat_to_string(x))),
        Format::Plain => format!("{}\n", rat_to_string(x)),
        Format::Latex => format!("{}\n", rat_latex(x)),
        Format::Csv => format!("n,value\n{n},{}\n", rat_to_string(x)),
    }
}

/// A polynomial in z with coefficients in Q(q), lowest degree first in JSON and CSV.
pub fn poly(p: &ZPoly, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(p).expect("ZPoly serializes")),
        Format::Plain => format!("{}\n", p.render("z")),
        Format::Latex => format!("{}\n", p.render_latex("z")),
        Format::Csv => {
            let mut s = String::from("k,num,den\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{},{}\n", coeff_cell(c.num()), coeff_cell(c.den())));
            }
            s
        }
    }
}

/// A polynomial in z with rational coefficients.
pub fn rational_poly(coeffs: &[BigRat], fmt: Format) -> String {
    let p = QPoly::new(coeffs.to_vec());
    match fmt {
        Format::Json => format!("{}\n", json!(p.to_strings())),
        Format::Plain => format!("{}\n", p.render("z")),
        Format::Latex => format!("{}\n", p.render_latex("z")),
        Format::Csv => {
            let mut s = String::from("k,value\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{}\n", rat_to_string(c)));
            }
            s
        }
    }
}

/// Rows of a table, either in Q(q) or specialized.
pub enum Rows {
    Exact(Vec<QRat>),
    Specialized(Vec<BigRat>),
}

impl Rows {
    fn len(&self) -> usize {
        match self {
            Rows::Exact(v) => v.len(),
            Rows::Specialized(v) => v.len(),
        }
    }

    fn json(&self, n: usize) -> String {
        match self {
            Rows::Exact(v) => qrat_json(&v[n]),
            Rows::Specialized(v) => json!(rat_to_string(&v[n])).to_string(),
        }
    }

    fn plain(&self, n: usize) -> String {
        match self {
            Rows::Exact(v) => v[n].render("q"),
            Rows::Specialized(v) => rat_to_string(&v[n]),
        }
    }

    fn latex(&self, n: usize) -> String {
        match self {
            Rows::Exact(v) => v[n].render_latex("q"),
            Rows::Specialized(v) => rat_latex(&v[n]),
        }
    }
}

pub fn table(rows: &Rows, h: i64, v: u32, fmt: Format) -> String {
    let mut s = String::new();
    match fmt {
        Format::Json => {
            let lines: Vec<String> = (0..rows.len())
                .map(|n| format!("  {{\"n\":{n},\"value\":{}}}", rows.json(n)))
                .collect();
            s.push_str("[\n");
            s.push_str(&lines.join(",\n"));
            s.push_str("\n]\n");
        }
        Format::Plain => {
            for n in 0..rows.len() {
                s.push_str(&format!("{n}\t{}\n", rows.plain(n)));
            }
        }
        Format::Latex => {
            s.push_str("\\begin{tabular}{rl}\n");
            s.push_str(&format!("$n$ & $E_{{n,q}}^{{({h},{v})}}$ \\\\\n\\hline\n"));
            for n in 0..rows.len() {
                s.push_str(&format!("{n} & ${}$ \\\\\n", rows.latex(n)));
            }
            s.push_str("\\end{tabular}\n");
        }
        Format::Csv => match rows {
            Rows::Exact(v) => {
                s.push_str("n,num,den\n");
                for (n, x) in v.iter().enumerate() {
                    s.push_str(&format!("{n},{},{}\n", coeff_cell(x.num()), coeff_cell(x.den())));
                }
            }
            Rows::Specialized(v) => {
                s.push_str("n,value\n");
                for (n, x) in v.iter().enumerate() {
                    s.push_str(&format!("{n},{}\n", rat_to_string(x)));
                }
            }
        },
    }
    s
}

fn witness_plain(w: &Witness) -> String {
    match w {
        Witness::Exact { lhs, rhs } => format!("lhs = {}, rhs = {}", lhs.render("q"), rhs.render("q")),
        Witness::Numeric {
            partial_sum,
            exact,
            difference,
            tolerance,
        } => format!("partial sum = {partial_sum}, exact = {exact}, |diff| = {difference:e} > {tolerance:e}"),
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn params_csv(p: &Params) -> String {
    [
        p.n.to_string(),
        opt(&p.h),
        opt(&p.v),
        opt(&p.d),
        p.args.join(";"),
        opt(&p.q0),
        opt(&p.terms),
    ]
    .iter()
    .map(|f| csv_field(f))
    .collect::<Vec<_>>()
    .join(",")
}

/// Verification reports: JSON is one record per line.
pub fn reports(reports: &[VerifyReport], fmt: Format) -> String {
    let mut s = String::new();
    match fmt {
        Format::Json => {
            for r in reports {
                s.push_str(&serde_json::to_string(r).expect("report serializes"));
                s.push('\n');
            }
        }
        Format::Plain => {
            for r in reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!("{tag} {} {}", r.identity, r.params));
                if let Some(w) = &r.witness {
                    s.push_str(&format!(": {}", witness_plain(w)));
                }
                s.push('\n');
            }
        }
        Format::Csv => {
            s.push_str("identity,n,h,v,d,args,q0,terms,status\n");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                s.push_str(&format!("{},{},{status}\n", r.identity, params_csv(&r.params)));
            }
        }
        Format::Latex => {
            s.push_str("\\begin{tabular}{lll}\nidentity & parameters & status \\\\\n\\hline\n");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                let params = r.params.to_string().replace('[', "\\{").replace(']', "\\}");
                s.push_str(&format!("\\texttt{{{}}} & {params} & {status} \\\\\n", r.identity));
            }
            s.push_str("\\end{tabular}\n");
        }
    }
    s
}

/// One selftest outcome.
pub fn check_line(check: &str, passed: bool, detail: &str, fmt: Format) -> String {
    match fmt {
        Format::Json => format!(
            "{{\"check\":{},\"status\":\"{}\",\"detail\":{}}}\n",
            json!(check),
            if passed { "pass" } else { "fail" },
            json!(detail)
        ),
        _ => format!("{} {check}: {detail}\n", if passed { "PASS" } else { "FAIL" }),
    }
}
