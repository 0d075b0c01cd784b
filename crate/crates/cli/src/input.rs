use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::de::DeserializeOwned;

/// Where a JSON document comes from: inline, a file (`-` for stdin), or a
/// named fixture.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Inline JSON document
    #[arg(value_name = "JSON", conflicts_with_all = ["file", "fixture"])]
    pub document: Option<String>,
    /// Read the document from a file, or `-` for stdin
    #[arg(long, conflicts_with = "fixture")]
    pub file: Option<PathBuf>,
    /// Load `<name>.json` from the fixtures directory
    #[arg(long)]
    pub fixture: Option<String>,
}

impl Source {
    pub fn load<T: DeserializeOwned>(&self, fixtures: &Path) -> Result<T, String> {
        let (text, origin) = if let Some(j) = &self.document {
            (j.clone(), "inline input".to_string())
        } else if let Some(p) = &self.file {
            if p.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
                (s, "stdin".to_string())
            } else {
                let s = std::fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?;
                (s, p.display().to_string())
            }
        } else if let Some(name) = &self.fixture {
            let p = fixtures.join(format!("{name}.json"));
            let s = std::fs::read_to_string(&p).map_err(|e| format!("fixture {name:?} ({}): {e}", p.display()))?;
            (s, format!("fixture {name}"))
        } else {
            return Err("no input: pass inline JSON, --file or --fixture".into());
        };
        parse(&text).map_err(|e| format!("malformed JSON in {origin}: {e}"))
    }
}

/// Deserializes, naming the offending field on failure.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner().to_string();
        if path == "." || path == "?" {
            inner
        } else {
            format!("field `{path}`: {inner}")
        }
    })
}

/// `"p,q"`, `"a,b,c"`: comma-separated integers.
pub fn int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("expected comma-separated integers, got {s:?}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use prismlv::SeifertSymbol;

    #[test]
    fn errors_name_the_field() {
        let e = parse::<SeifertSymbol>(r#"{"class":"Oo","genus":0,"fibers":[[1,"x"]]}"#).unwrap_err();
        assert!(e.contains("fibers[0]"), "{e}");
        let e = parse::<SeifertSymbol>(r#"{"class":"Oo","genus":-1,"fibers":[]}"#).unwrap_err();
        assert!(e.contains("genus"), "{e}");
        assert!(!e.contains('\n'));
    }

    #[test]
    fn int_lists() {
        assert_eq!(int_list::<i64>("1,-2").unwrap(), vec![1, -2]);
        assert!(int_list::<i64>("1,a").is_err());
    }
}
