//! Matrix and explicit-game files.

use std::collections::BTreeMap;
use std::path::Path;

use pmas_core::{AssignmentGame, Coalition, ExplicitGame, Game, Rational, SurplusMatrix};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Matrix,
    Game,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Matrix => "matrix",
            Format::Game => "game",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Matrix(AssignmentGame),
    Explicit {
        game: ExplicitGame,
        names: Option<Vec<String>>,
    },
}

impl Loaded {
    pub fn game(&self) -> &(dyn Game + Sync) {
        match self {
            Loaded::Matrix(g) => g,
            Loaded::Explicit { game, .. } => game,
        }
    }

    pub fn assignment(&self) -> Option<&AssignmentGame> {
        match self {
            Loaded::Matrix(g) => Some(g),
            Loaded::Explicit { .. } => None,
        }
    }

    pub fn format(&self) -> Format {
        match self {
            Loaded::Matrix(_) => Format::Matrix,
            Loaded::Explicit { .. } => Format::Game,
        }
    }

    pub fn players(&self) -> usize {
        self.game().players()
    }
}

pub fn detect_format(path: &Path, forced: Option<Format>) -> Result<Format, CliError> {
    if let Some(f) = forced {
        return Ok(f);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("matrix") => Ok(Format::Matrix),
        Some("game") | Some("json") => Ok(Format::Game),
        _ => Err(CliError::parse(
            &path.display().to_string(),
            1,
            1,
            "cannot tell the format from the extension; pass --format matrix|game",
        )),
    }
}

pub fn load(path: &Path, forced: Option<Format>) -> Result<Loaded, CliError> {
    let name = path.display().to_string();
    let format = detect_format(path, forced)?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    match format {
        Format::Matrix => Ok(Loaded::Matrix(AssignmentGame::new(parse_matrix(
            &name, &text,
        )?)?)),
        Format::Game => {
            let (game, names) = parse_game(&name, &text)?;
            Ok(Loaded::Explicit { game, names })
        }
    }
}

/// One row per line; entries split on commas or whitespace; `#` starts a comment line.
pub fn parse_matrix(source: &str, text: &str) -> Result<SurplusMatrix, CliError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut first_line = 0;
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (col, token) in tokens(line) {
            let value: Rational = token
                .parse()
                .map_err(|e| CliError::parse(source, lineno, col, format!("{e}")))?;
            if value.is_negative() {
                return Err(CliError::parse(
                    source,
                    lineno,
                    col,
                    format!("negative entry {value}"),
                ));
            }
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(CliError::parse(
                    source,
                    lineno,
                    1,
                    format!(
                        "row has {} entries but line {first_line} has {}",
                        row.len(),
                        first.len()
                    ),
                ));
            }
        } else {
            first_line = lineno;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::parse(source, 1, 1, "no matrix rows"));
    }
    Ok(SurplusMatrix::new(rows)?)
}

/// Tokens with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        let sep = ch == ',' || ch.is_whitespace();
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PlayersField {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ValueField {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameFile {
    players: PlayersField,
    #[serde(default)]
    values: BTreeMap<String, ValueField>,
}

/// Line and column of the first occurrence of `needle`, or the start of the text.
fn locate(text: &str, needle: &str) -> (usize, usize) {
    let Some(offset) = text.find(needle) else {
        return (1, 1);
    };
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

/// `{"players": 4 | ["a", ...], "values": {"1,2": "3/2", ...}}`; unlisted coalitions are worth zero.
pub fn parse_game(
    source: &str,
    text: &str,
) -> Result<(ExplicitGame, Option<Vec<String>>), CliError> {
    let file: GameFile = serde_json::from_str(text)
        .map_err(|e| CliError::parse(source, e.line().max(1), e.column().max(1), e.to_string()))?;
    let (n, names) = match file.players {
        PlayersField::Count(n) => (n, None),
        PlayersField::Names(names) => (names.len(), Some(names)),
    };
    if n == 0 {
        let (line, col) = locate(text, "\"players\"");
        return Err(CliError::parse(
            source,
            line,
            col,
            "a game needs at least one player",
        ));
    }
    let mut game = ExplicitGame::new(n)?;
    for (key, value) in &file.values {
        let quoted = format!("\"{key}\"");
        let here = |message: String| {
            let (line, col) = locate(text, &quoted);
            CliError::parse(source, line, col, message)
        };
        let s = parse_coalition(key, n, names.as_deref()).map_err(&here)?;
        let worth = match value {
            ValueField::Int(v) => Rational::from_integer(*v),
            ValueField::Text(t) => t.parse().map_err(|e| here(format!("{e}")))?,
        };
        game.set(s, worth).map_err(|e| here(e.to_string()))?;
    }
    Ok((game, names))
}

/// A comma list of 1-based player numbers or player names.
pub fn parse_coalition(key: &str, n: usize, names: Option<&[String]>) -> Result<Coalition, String> {
    let mut s = Coalition::EMPTY;
    for part in key.split(',').map(str::trim) {
        let index = match names.and_then(|ns| ns.iter().position(|x| x == part)) {
            Some(i) => i,
            None => match part.parse::<usize>() {
                Ok(k) if (1..=n).contains(&k) => k - 1,
                _ => return Err(format!("unknown player {part:?} in coalition {key:?}")),
            },
        };
        s = s.with(index);
    }
    if s.is_empty() {
        return Err(format!("empty coalition {key:?}"));
    }
    Ok(s)
}

/// Comma-separated rationals, as given to `--point`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>, CliError> {
    let mut out = Vec::new();
    let mut col = 1;
    for part in text.split(',') {
        let value = part
            .parse()
            .map_err(|e| CliError::parse("--point", 1, col, format!("{e}")))?;
        out.push(value);
        col += part.chars().count() + 1;
    }
    Ok(out)
}

pub fn check_point(g: &(dyn Game + Sync), x: &[Rational]) -> Result<(), CliError> {
    if x.len() != g.players() {
        return Err(CliError::parse(
            "--point",
            1,
            1,
            format!("expected {} entries, found {}", g.players(), x.len()),
        ));
    }
    Ok(())
}
