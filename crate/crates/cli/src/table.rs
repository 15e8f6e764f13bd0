//! Table export: aligned text, CSV with name headers, and a JSON document
//! holding both operations of a double magma.

use std::collections::BTreeMap;

use dimagma_core::{DoubleMagma, Magma};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Operation {
    Star,
    Bullet,
}

impl Operation {
    pub fn symbol(self) -> &'static str {
        match self {
            Operation::Star => "*",
            Operation::Bullet => "•",
        }
    }

    pub fn of(self, d: &DoubleMagma) -> &Magma {
        match self {
            Operation::Star => d.star(),
            Operation::Bullet => d.bullet(),
        }
    }
}

/// Rewrites digit runs that follow a letter as superscripts, so `a6b` becomes `a⁶b`.
pub fn superscript(name: &str) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = String::with_capacity(name.len());
    let mut after_letter = false;
    for c in name.chars() {
        match c.to_digit(10) {
            Some(d) if after_letter => out.push(DIGITS[d as usize]),
            _ => {
                after_letter = c.is_alphabetic();
                out.push(c);
            }
        }
    }
    out
}

/// Aligned grid: the operator symbol and column names, then one row per element.
pub fn render_text(magma: &Magma, symbol: &str, superscripts: bool) -> String {
    let names: Vec<String> =
        magma.names().iter().map(|n| if superscripts { superscript(n) } else { n.clone() }).collect();
    let width = names.iter().map(|n| n.chars().count()).chain([symbol.chars().count()]).max().unwrap_or(1);
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let row: Vec<String> = cells.map(|c| format!("{c:<width$}")).collect();
        out.push_str(row.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut std::iter::once(symbol).chain(names.iter().map(String::as_str)));
    let n = names.len();
    for (i, head) in names.iter().enumerate() {
        let cells = magma.table()[i * n..(i + 1) * n].iter().map(|&v| names[v as usize].as_str());
        line(&mut std::iter::once(head.as_str()).chain(cells));
    }
    out
}

pub fn render_csv(magma: &Magma, symbol: &str) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let names = magma.names();
    w.write_record(std::iter::once(symbol).chain(names.iter().map(String::as_str)))?;
    let n = names.len();
    for (i, head) in names.iter().enumerate() {
        let cells = magma.table()[i * n..(i + 1) * n].iter().map(|&v| names[v as usize].as_str());
        w.write_record(std::iter::once(head.as_str()).chain(cells))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("names are UTF-8"))
}

/// Reads [`render_csv`] output back into a magma.
pub fn parse_csv(text: &str) -> Result<Magma, CliError> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut records = r.records();
    let header = records.next().ok_or_else(|| CliError::Input("empty CSV".into()))??;
    let names: Vec<String> = header.iter().skip(1).map(String::from).collect();
    let index: BTreeMap<&str, u32> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i as u32)).collect();
    let mut op = Vec::with_capacity(names.len() * names.len());
    for (i, record) in records.enumerate() {
        let record = record?;
        if record.get(0) != names.get(i).map(String::as_str) {
            return Err(CliError::Input(format!("row {} is not headed by {:?}", i + 1, names.get(i))));
        }
        for cell in record.iter().skip(1) {
            let v = index.get(cell).ok_or_else(|| CliError::Input(format!("unknown element {cell:?}")))?;
            op.push(*v);
        }
    }
    Magma::new(names, op).map_err(|e| CliError::Input(e.to_string()))
}

/// Both operations of one double magma in a single document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structured {
    pub names: Vec<String>,
    pub star: OpTable,
    pub bullet: OpTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpTable {
    pub op: Vec<Vec<u32>>,
}

impl Structured {
    pub fn new(d: &DoubleMagma) -> Self {
        let rows = |m: &Magma| OpTable { op: m.table().chunks(m.order().max(1)).map(<[u32]>::to_vec).collect() };
        Structured { names: d.names().to_vec(), star: rows(d.star()), bullet: rows(d.bullet()) }
    }

    pub fn to_double(&self) -> Result<DoubleMagma, CliError> {
        let magma =
            |t: &OpTable| Magma::new(self.names.clone(), t.op.concat()).map_err(|e| CliError::Input(e.to_string()));
        DoubleMagma::new(magma(&self.star)?, magma(&self.bullet)?).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dimagma_core::{commutator_double, FiniteGroup};

    #[test]
    fn superscripts() {
        assert_eq!(superscript("a6b"), "a⁶b");
        assert_eq!(superscript("a12"), "a¹²");
        assert_eq!(superscript("(a,1)"), "(a,1)");
        assert_eq!(superscript("[1,0;0,1]"), "[1,0;0,1]");
    }

    #[test]
    fn csv_round_trip() {
        let d = commutator_double(&FiniteGroup::dihedral(4).unwrap());
        let text = render_csv(d.star(), "*").unwrap();
        assert_eq!(&parse_csv(&text).unwrap(), d.star());
        assert!(text.starts_with("*,1,a,a2,a3,b,ab,a2b,a3b\n"));
    }

    #[test]
    fn text_grid() {
        let d = commutator_double(&FiniteGroup::cyclic(2).unwrap());
        assert_eq!(render_text(d.star(), "*", false), "*  1  a\n1  1  1\na  1  1\n");
    }

    #[test]
    fn structured_round_trip() {
        let d = commutator_double(&FiniteGroup::dihedral(3).unwrap());
        let s = Structured::new(&d);
        let json = serde_json::to_string(&s).unwrap();
        let back: Structured = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_double().unwrap(), d);
    }
}
