//! Group descriptions: JSON group-spec files, short CLI names and words.

use serde::{Deserialize, Serialize};

use super::families::{abelian_2group, cyclic, dihedral, extraspecial_32_plus};
use super::{FiniteGroup, GroupError, GroupPresentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecKind {
    Table,
    Builtin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltinSpec {
    pub family: String,
    #[serde(default)]
    pub params: Vec<usize>,
}

/// `{"name", "kind": "table"|"builtin", "table", "builtin"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub kind: SpecKind,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub builtin: Option<BuiltinSpec>,
}

/// A constructed group together with its presentation when known.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub family: Option<String>,
    pub params: Vec<usize>,
    pub group: FiniteGroup,
    pub presentation: Option<GroupPresentation>,
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))
    }

    /// Accepts `extraspecial32`, `dihedral:<m>`, `abelian:<o1>x<o2>...` and
    /// `cyclic:<n>`.
    pub fn from_cli_name(s: &str) -> Result<Self, GroupError> {
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<usize> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split('x')
                .map(|p| p.trim().parse().map_err(|_| GroupError::Parse(format!("bad parameter `{p}` in `{s}`"))))
                .collect::<Result<_, _>>()?
        };
        let family = family.trim().to_ascii_lowercase();
        let ok = match family.as_str() {
            "extraspecial32" => params.is_empty(),
            "dihedral" | "cyclic" => params.len() == 1,
            "abelian" => !params.is_empty(),
            _ => return Err(GroupError::Parse(format!("unknown group `{s}`"))),
        };
        if !ok {
            return Err(GroupError::Parse(format!("wrong parameters for `{s}`")));
        }
        Ok(GroupSpec { name: s.to_string(), kind: SpecKind::Builtin, table: None, builtin: Some(BuiltinSpec { family, params }) })
    }

    /// CLI argument: a builtin name, or a path to a JSON group-spec file.
    pub fn resolve_arg(arg: &str) -> Result<Self, GroupError> {
        match Self::from_cli_name(arg) {
            Ok(s) => Ok(s),
            Err(name_err) => match std::fs::read_to_string(arg) {
                Ok(text) => Self::from_json(&text),
                Err(_) => Err(name_err),
            },
        }
    }

    pub fn build(&self) -> Result<NamedGroup, GroupError> {
        match self.kind {
            SpecKind::Table => {
                let table = self.table.clone().ok_or_else(|| GroupError::Parse("table spec without `table`".into()))?;
                let group = FiniteGroup::build_from_table(table)?;
                Ok(NamedGroup { name: self.name.clone(), family: None, params: Vec::new(), group, presentation: None })
            }
            SpecKind::Builtin => {
                let b = self.builtin.as_ref().ok_or_else(|| GroupError::Parse("builtin spec without `builtin`".into()))?;
                let one = || {
                    b.params.first().copied().filter(|_| b.params.len() == 1).ok_or_else(|| {
                        GroupError::InvalidParameter(format!("{} takes exactly one parameter", b.family))
                    })
                };
                let (group, pres) = match b.family.as_str() {
                    "extraspecial32" => extraspecial_32_plus(),
                    "dihedral" => dihedral(one()?)?,
                    "cyclic" => cyclic(one()?)?,
                    "abelian" => abelian_2group(&b.params)?,
                    other => return Err(GroupError::Parse(format!("unknown family `{other}`"))),
                };
                Ok(NamedGroup {
                    name: self.name.clone(),
                    family: Some(b.family.clone()),
                    params: b.params.clone(),
                    group,
                    presentation: Some(pres),
                })
            }
        }
    }
}

impl NamedGroup {
    /// Resolves an element given as a word in the generator names
    /// (`a^2`, `r*s`, `b a^-1`, `1`), an element label, or an index `#i`.
    pub fn element(&self, text: &str) -> Result<usize, GroupError> {
        let t = text.trim();
        if let Some(idx) = t.strip_prefix('#') {
            let i: usize = idx.parse().map_err(|_| GroupError::Parse(format!("bad element index `{t}`")))?;
            return if i < self.group.order() {
                Ok(i)
            } else {
                Err(GroupError::Parse(format!("element index {i} out of range")))
            };
        }
        if let Some(i) = self.group.labels().and_then(|l| l.iter().position(|x| x == t)) {
            return Ok(i);
        }
        let pres = self
            .presentation
            .as_ref()
            .ok_or_else(|| GroupError::Parse(format!("`{t}`: this group has no generator names")))?;
        let word = parse_word(t, &pres.generator_names)?;
        Ok(self.group.eval_word(&word, &pres.generator_elements))
    }
}

/// Parses `g1^e1 * g2 * ...` (separators `*` or whitespace) against the
/// given generator names; `1` is the empty word.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, GroupError> {
    let t = text.trim();
    if t == "1" || t.is_empty() {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for tok in t.split(|c: char| c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => (n, e.parse::<i32>().map_err(|_| GroupError::Parse(format!("bad exponent in `{tok}`")))?),
            None => (tok, 1),
        };
        let s = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::Parse(format!("unknown generator `{name}` (known: {})", names.join(", "))))?;
        if exp != 0 {
            word.push((s, exp));
        }
    }
    Ok(word)
}
