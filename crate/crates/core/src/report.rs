//! Pass/fail reports produced by the verification sweeps.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

#[derive(Clone, Debug)]
pub struct Case {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub target: String,
    pub n: usize,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(target: impl Into<String>, n: usize) -> Report {
        Report { target: target.into(), n, cases: Vec::new() }
    }

    pub fn check(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.cases.push(Case { id: id.into(), pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    /// Canonical ordering by check id, independent of how the sweep ran.
    pub fn sort_cases(&mut self) {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                self.target,
                self.n,
                c.id,
                if c.pass { "pass" } else { "FAIL" },
                c.detail
            ));
        }
        out
    }
}

impl Serialize for Case {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Case", 3)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("pass", &self.pass)?;
        st.serialize_field("detail", &self.detail)?;
        st.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // lemma reports use the key "lemma" for their name
        let key = if self.target.starts_with("lem") { "lemma" } else { "target" };
        let mut st = s.serialize_struct("Report", 3)?;
        st.serialize_field(key, &self.target)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("cases", &self.cases)?;
        st.end()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (n={}): {}",
            self.target,
            self.n,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for c in &self.cases {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.pass { "ok" } else { "FAIL" },
                c.id,
                c.detail
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_reports_use_the_lemma_key() {
        let mut r = Report::new("lem41", 3);
        r.check("w=123", true, "0 = 0");
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["lemma"], "lem41");
        assert_eq!(v["cases"][0]["pass"], true);

        let r2 = Report::new("thm14", 3);
        let v2 = serde_json::to_value(&r2).unwrap();
        assert_eq!(v2["target"], "thm14");
    }

    #[test]
    fn sorted_cases_are_canonical() {
        let mut r = Report::new("thm14", 3);
        r.check("w=213", true, "");
        r.check("w=123", false, "bad");
        r.sort_cases();
        assert_eq!(r.cases[0].id, "w=123");
        assert!(!r.passed());
        assert!(r.to_tsv().contains("thm14\t3\tw=123\tFAIL\tbad"));
    }
}
