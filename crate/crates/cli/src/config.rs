//! Flat `key = value` config files whose keys are long flag names.

use std::collections::BTreeMap;
use std::path::Path;

use crate::CliError;

/// Flags that name config files and are never stored in one.
const META_FLAGS: [&str; 2] = ["config", "save-config"];

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut entries = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || CliError::ConfigLine { line: i + 1, text: line.to_string() };
        let (key, value) = line.split_once('=').ok_or_else(bad)?;
        let key = key.trim();
        if key.is_empty() || key.starts_with('-') || META_FLAGS.contains(&key) {
            return Err(bad());
        }
        if entries.insert(key.to_string(), value.trim().to_string()).is_some() {
            return Err(CliError::Usage(format!("config key `{key}` given twice")));
        }
    }
    Ok(entries)
}

pub fn render_config(entries: &BTreeMap<String, String>) -> String {
    entries.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

/// Splits `--key value` and `--key=value` pairs out of an argument list (program name excluded).
/// Every flag of the tool takes a value, so the split is unambiguous.
pub fn flag_pairs(args: &[String]) -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    let mut i = 0;
    while i < args.len() {
        if let Some(flag) = args[i].strip_prefix("--").filter(|f| !f.is_empty()) {
            match flag.split_once('=') {
                Some((k, v)) => pairs.push((k.to_string(), v.to_string())),
                None => {
                    if let Some(v) = args.get(i + 1) {
                        pairs.push((flag.to_string(), v.clone()));
                        i += 1;
                    }
                }
            }
        }
        i += 1;
    }
    pairs
}

/// The storable flags of an argument list.
pub fn config_of_flags(args: &[String]) -> BTreeMap<String, String> {
    flag_pairs(args).into_iter().filter(|(k, _)| !META_FLAGS.contains(&k.as_str())).collect()
}

/// Appends `--key=value` for every config entry whose flag is absent from `args`.
pub fn merge_into(args: &mut Vec<String>, entries: &BTreeMap<String, String>) {
    let given: Vec<String> = flag_pairs(&args[1..]).into_iter().map(|(k, _)| k).collect();
    for (key, value) in entries {
        if !given.contains(key) {
            args.push(format!("--{key}={value}"));
        }
    }
}

/// Loads the file named by `--config`, if any, and merges it under the explicit flags.
pub fn apply_config_file(mut args: Vec<String>) -> Result<Vec<String>, CliError> {
    let path = flag_pairs(&args[1.min(args.len())..]).into_iter().find(|(k, _)| k == "config").map(|(_, v)| v);
    if let Some(path) = path {
        let text = read(Path::new(&path))?;
        let entries = parse_config(&text)?;
        merge_into(&mut args, &entries);
    }
    Ok(args)
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn write(path: &Path, entries: &BTreeMap<String, String>) -> Result<(), CliError> {
    std::fs::write(path, render_config(entries)).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
