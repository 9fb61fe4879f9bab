//! Constrained JSON decoding for entity extraction.
//!
//! A compiled [`Automaton`] is a character-level DFA over exactly the
//! canonical outputs `{"K1": [..], "K2": [..]}`: every schema key appears
//! exactly once, in order, each holding an array of bounded strings over a
//! fixed character set, with a single space after every colon and comma.
//! Token-level masking ([`allowed_tokens`]) and advancement ([`advance`])
//! are defined by running the DFA over a token's characters, so multi-char
//! tokens behave identically to their character spelling.
//!
//! Backends without logit access skip the automaton; their raw generations
//! go through [`repair_or_reject`] instead, which never fails — it falls
//! back to the all-empty mapping.

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use thiserror::Error;

/// Hard ceiling on entities per key for decoding.
pub const MAX_ENTITIES_PER_KEY: usize = 32;
/// Hard ceiling on characters per entity string (an escape counts as one).
pub const MAX_ENTITY_CHARS: usize = 128;

#[derive(Debug, Error)]
pub enum ConstraintError {
    #[error("schema has no keys")]
    EmptyKeys,
    #[error("invalid schema key {0:?}: {1}")]
    InvalidKey(String, &'static str),
    #[error("schema charset must not contain newline")]
    NewlineInCharset,
    #[error("duplicate schema key {0:?}")]
    DuplicateKey(String),
    #[error("vocabulary: duplicate token id {0}")]
    DuplicateTokenId(u32),
    #[error("vocabulary: token {0} is empty")]
    EmptyToken(u32),
    #[error("unknown token id {0}")]
    UnknownToken(u32),
    #[error("state does not belong to this automaton")]
    ForeignState,
    #[error("token {id} ({text:?}) is not admissible here")]
    TokenNotAllowed { id: u32, text: String },
}

/// Fixed-key output schema for one decoding episode.
#[derive(Debug, Clone)]
pub struct OutputSchema {
    /// JSON keys in emission order (localized entity type names).
    pub keys: Vec<String>,
    /// Characters allowed inside entity strings. `"` and `\` are reachable
    /// only through their escape sequences; `\n` is never allowed.
    pub string_charset: Vec<char>,
    pub max_entities_per_key: usize,
    pub max_entity_chars: usize,
}

impl OutputSchema {
    /// Schema with default bounds.
    #[must_use]
    pub fn new(keys: Vec<String>, string_charset: Vec<char>) -> OutputSchema {
        OutputSchema {
            keys,
            string_charset,
            max_entities_per_key: MAX_ENTITIES_PER_KEY,
            max_entity_chars: MAX_ENTITY_CHARS,
        }
    }
}

/// Token inventory for masking: unique ids, non-empty strings.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    entries: Vec<(u32, String)>,
}

impl Vocabulary {
    pub fn new(mut entries: Vec<(u32, String)>) -> Result<Vocabulary, ConstraintError> {
        entries.sort_by_key(|(id, _)| *id);
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(ConstraintError::DuplicateTokenId(window[0].0));
            }
        }
        for (id, text) in &entries {
            if text.is_empty() {
                return Err(ConstraintError::EmptyToken(*id));
            }
        }
        Ok(Vocabulary { entries })
    }

    /// Tokens in ascending id order.
    #[must_use]
    pub fn tokens(&self) -> &[(u32, String)] {
        &self.entries
    }

    pub fn text(&self, id: u32) -> Result<&str, ConstraintError> {
        self.entries
            .binary_search_by_key(&id, |(i, _)| *i)
            .map(|idx| self.entries[idx].1.as_str())
            .map_err(|_| ConstraintError::UnknownToken(id))
    }
}

/// DFA position. `Seg` walks fixed skeleton text; the other variants sit at
/// the grammar's branch points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    /// Inside the fixed run before key `key`'s array: `{"K": [` / `, "K": [`.
    Seg { key: usize, off: usize },
    /// Just after `[`: expect `]` or the opening quote of the first string.
    Elems { key: usize },
    /// Inside string `ent` of key `key` with `chars` logical chars consumed.
    Str { key: usize, ent: usize, chars: usize, esc: bool },
    /// After a closing quote, `done` strings complete: expect `]` or `,`.
    AfterEnt { key: usize, done: usize },
    /// After the comma between strings: expect the space, then the quote.
    Sep { key: usize, done: usize, space_seen: bool },
    /// After the last key's `]`: expect `}`.
    End,
    /// Complete output.
    Accept,
}

/// Opaque decoding state: the DFA node plus the text emitted so far (always
/// a prefix of some accepted output).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintState {
    automaton_id: u64,
    node: Node,
    emitted: String,
}

impl ConstraintState {
    /// Text emitted so far.
    #[must_use]
    pub fn emitted(&self) -> &str {
        &self.emitted
    }
}

/// Compiled character-level DFA for one [`OutputSchema`].
#[derive(Debug, Clone)]
pub struct Automaton {
    segs: Vec<Vec<char>>,
    plain_chars: Vec<char>,
    allow_escaped_quote: bool,
    allow_escaped_backslash: bool,
    max_entities: usize,
    max_chars: usize,
    keys: Vec<String>,
    id: u64,
}

/// Builds the DFA. Keys must be unique, non-empty, and free of characters
/// that would need escaping inside a JSON string.
pub fn compile_schema(schema: &OutputSchema) -> Result<Automaton, ConstraintError> {
    if schema.keys.is_empty() {
        return Err(ConstraintError::EmptyKeys);
    }
    let mut seen = std::collections::HashSet::new();
    for key in &schema.keys {
        if key.is_empty() {
            return Err(ConstraintError::InvalidKey(key.clone(), "empty"));
        }
        if key.chars().any(|c| c == '"' || c == '\\' || c == '\n') {
            return Err(ConstraintError::InvalidKey(
                key.clone(),
                "keys may not contain quotes, backslashes, or newlines",
            ));
        }
        if !seen.insert(key.clone()) {
            return Err(ConstraintError::DuplicateKey(key.clone()));
        }
    }
    if schema.string_charset.contains(&'\n') {
        return Err(ConstraintError::NewlineInCharset);
    }
    let mut plain_chars: Vec<char> = schema
        .string_charset
        .iter()
        .copied()
        .filter(|&c| c != '"' && c != '\\')
        .collect();
    plain_chars.sort_unstable();
    plain_chars.dedup();

    let segs: Vec<Vec<char>> = schema
        .keys
        .iter()
        .enumerate()
        .map(|(i, key)| {
            let prefix = if i == 0 { "{\"" } else { ", \"" };
            format!("{prefix}{key}\": [").chars().collect()
        })
        .collect();

    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    schema.keys.hash(&mut hasher);
    plain_chars.hash(&mut hasher);
    schema.string_charset.contains(&'"').hash(&mut hasher);
    schema.string_charset.contains(&'\\').hash(&mut hasher);
    schema.max_entities_per_key.hash(&mut hasher);
    schema.max_entity_chars.hash(&mut hasher);

    Ok(Automaton {
        segs,
        plain_chars,
        allow_escaped_quote: schema.string_charset.contains(&'"'),
        allow_escaped_backslash: schema.string_charset.contains(&'\\'),
        max_entities: schema.max_entities_per_key,
        max_chars: schema.max_entity_chars,
        keys: schema.keys.clone(),
        id: hasher.finish(),
    })
}

impl Automaton {
    /// State before any output.
    #[must_use]
    pub fn initial_state(&self) -> ConstraintState {
        ConstraintState {
            automaton_id: self.id,
            node: Node::Seg { key: 0, off: 0 },
            emitted: String::new(),
        }
    }

    /// True when the emitted text is a complete output.
    #[must_use]
    pub fn is_accepting(&self, state: &ConstraintState) -> bool {
        state.automaton_id == self.id && state.node == Node::Accept
    }

    fn end_of_key(&self, key: usize) -> Node {
        if key + 1 < self.segs.len() {
            Node::Seg { key: key + 1, off: 0 }
        } else {
            Node::End
        }
    }

    fn step_node(&self, node: Node, ch: char) -> Option<Node> {
        match node {
            Node::Seg { key, off } => {
                (self.segs[key][off] == ch).then(|| {
                    if off + 1 < self.segs[key].len() {
                        Node::Seg { key, off: off + 1 }
                    } else {
                        Node::Elems { key }
                    }
                })
            }
            Node::Elems { key } => match ch {
                ']' => Some(self.end_of_key(key)),
                '"' if self.max_entities > 0 => {
                    Some(Node::Str { key, ent: 0, chars: 0, esc: false })
                }
                _ => None,
            },
            Node::Str { key, ent, chars, esc: true } => match ch {
                '"' if self.allow_escaped_quote => {
                    Some(Node::Str { key, ent, chars: chars + 1, esc: false })
                }
                '\\' if self.allow_escaped_backslash => {
                    Some(Node::Str { key, ent, chars: chars + 1, esc: false })
                }
                _ => None,
            },
            Node::Str { key, ent, chars, esc: false } => match ch {
                '"' => Some(Node::AfterEnt { key, done: ent + 1 }),
                '\\' if chars < self.max_chars
                    && (self.allow_escaped_quote || self.allow_escaped_backslash) =>
                {
                    Some(Node::Str { key, ent, chars, esc: true })
                }
                c if chars < self.max_chars && self.plain_chars.binary_search(&c).is_ok() => {
                    Some(Node::Str { key, ent, chars: chars + 1, esc: false })
                }
                _ => None,
            },
            Node::AfterEnt { key, done } => match ch {
                ']' => Some(self.end_of_key(key)),
                ',' if done < self.max_entities => {
                    Some(Node::Sep { key, done, space_seen: false })
                }
                _ => None,
            },
            Node::Sep { key, done, space_seen: false } => {
                (ch == ' ').then_some(Node::Sep { key, done, space_seen: true })
            }
            Node::Sep { key, done, space_seen: true } => {
                (ch == '"').then_some(Node::Str { key, ent: done, chars: 0, esc: false })
            }
            Node::End => (ch == '}').then_some(Node::Accept),
            Node::Accept => None,
        }
    }

    /// Advances one character; `None` when the character is inadmissible.
    #[must_use]
    pub fn step_char(&self, state: &ConstraintState, ch: char) -> Option<ConstraintState> {
        if state.automaton_id != self.id {
            return None;
        }
        self.step_node(state.node, ch).map(|node| {
            let mut emitted = state.emitted.clone();
            emitted.push(ch);
            ConstraintState { automaton_id: self.id, node, emitted }
        })
    }

    fn run_token(&self, node: Node, text: &str) -> Option<Node> {
        let mut cur = node;
        for ch in text.chars() {
            cur = self.step_node(cur, ch)?;
        }
        Some(cur)
    }

    /// Characters admissible from a state, for diagnostics and enumeration.
    #[must_use]
    pub fn allowed_chars(&self, state: &ConstraintState) -> Vec<char> {
        if state.automaton_id != self.id {
            return Vec::new();
        }
        self.chars_from(state.node)
    }

    fn chars_from(&self, node: Node) -> Vec<char> {
        let mut out = Vec::new();
        match node {
            Node::Seg { key, off } => out.push(self.segs[key][off]),
            Node::Elems { .. } => {
                out.push(']');
                if self.max_entities > 0 {
                    out.push('"');
                }
            }
            Node::Str { esc: true, .. } => {
                if self.allow_escaped_quote {
                    out.push('"');
                }
                if self.allow_escaped_backslash {
                    out.push('\\');
                }
            }
            Node::Str { chars, esc: false, .. } => {
                out.push('"');
                if chars < self.max_chars {
                    if self.allow_escaped_quote || self.allow_escaped_backslash {
                        out.push('\\');
                    }
                    out.extend(self.plain_chars.iter().copied());
                }
            }
            Node::AfterEnt { done, .. } => {
                out.push(']');
                if done < self.max_entities {
                    out.push(',');
                }
            }
            Node::Sep { space_seen: false, .. } => out.push(' '),
            Node::Sep { space_seen: true, .. } => out.push('"'),
            Node::End => out.push('}'),
            Node::Accept => {}
        }
        out
    }

    /// Number of distinct complete outputs this automaton accepts, or
    /// `None` on `u128` overflow. Computed by walking the DFA's transition
    /// graph, so it reflects what the mask actually admits.
    #[must_use]
    pub fn count_accepted(&self) -> Option<u128> {
        // Iterative post-order over the (acyclic) node graph; counts per
        // node are summed over outgoing characters.
        let mut memo: std::collections::HashMap<Node, u128> = std::collections::HashMap::new();
        memo.insert(Node::Accept, 1);
        enum Frame {
            Enter(Node),
            Exit(Node),
        }
        let mut stack = vec![Frame::Enter(Node::Seg { key: 0, off: 0 })];
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Enter(node) => {
                    if memo.contains_key(&node) {
                        continue;
                    }
                    stack.push(Frame::Exit(node));
                    for ch in self.chars_from(node) {
                        let next = self.step_node(node, ch).expect("listed char must step");
                        if !memo.contains_key(&next) {
                            stack.push(Frame::Enter(next));
                        }
                    }
                }
                Frame::Exit(node) => {
                    let mut total: u128 = 0;
                    for ch in self.chars_from(node) {
                        let next = self.step_node(node, ch).expect("listed char must step");
                        total = total.checked_add(memo[&next])?;
                    }
                    memo.insert(node, total);
                }
            }
        }
        Some(memo[&Node::Seg { key: 0, off: 0 }])
    }

    /// Upper bound on the character length of any accepted output; every
    /// decode terminates within this many characters.
    #[must_use]
    pub fn max_output_chars(&self) -> usize {
        let seg_total: usize = self.segs.iter().map(Vec::len).sum();
        // Worst case per key: max_entities strings, each quoted with all
        // chars escaped (2 chars per logical char) plus `, ` separators.
        let per_key = self.max_entities * (2 * self.max_chars + 2)
            + self.max_entities.saturating_sub(1) * 2
            + 1; // closing ]
        seg_total + self.keys.len() * per_key + 1 // final }
    }

    /// Schema keys in emission order.
    #[must_use]
    pub fn keys(&self) -> &[String] {
        &self.keys
    }
}

/// Token ids (ascending) whose text keeps the emitted text a prefix of an
/// accepted output. Empty only in the accepting state.
pub fn allowed_tokens(
    automaton: &Automaton,
    state: &ConstraintState,
    vocab: &Vocabulary,
) -> Result<Vec<u32>, ConstraintError> {
    if state.automaton_id != automaton.id {
        return Err(ConstraintError::ForeignState);
    }
    Ok(vocab
        .tokens()
        .iter()
        .filter(|(_, text)| automaton.run_token(state.node, text).is_some())
        .map(|(id, _)| *id)
        .collect())
}

/// Consumes one token, returning the successor state; erring on tokens the
/// mask would have excluded.
pub fn advance(
    automaton: &Automaton,
    state: &ConstraintState,
    token_id: u32,
    vocab: &Vocabulary,
) -> Result<ConstraintState, ConstraintError> {
    if state.automaton_id != automaton.id {
        return Err(ConstraintError::ForeignState);
    }
    let text = vocab.text(token_id)?;
    let node = automaton
        .run_token(state.node, text)
        .ok_or_else(|| ConstraintError::TokenNotAllowed { id: token_id, text: text.to_string() })?;
    let mut emitted = state.emitted.clone();
    emitted.push_str(text);
    Ok(ConstraintState { automaton_id: automaton.id, node, emitted })
}

/// Renders the canonical textual form of a key→strings mapping: keys in the
/// given order, a single space after each colon and comma, `"` and `\`
/// escaped. The result is exactly the text an automaton over the same keys
/// accepts (bounds permitting).
#[must_use]
pub fn canonical_json_object(pairs: &[(String, Vec<String>)]) -> String {
    let mut out = String::from("{");
    for (i, (key, values)) in pairs.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push('"');
        out.push_str(key);
        out.push_str("\": [");
        for (j, value) in values.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push('"');
            for ch in value.chars() {
                match ch {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    c => out.push(c),
                }
            }
            out.push('"');
        }
        out.push(']');
    }
    out.push('}');
    out
}

/// Best-effort recovery of a schema mapping from unconstrained output.
///
/// Scans for the first balanced JSON object, parses it, keeps schema keys
/// whose values are string arrays (missing keys become empty lists, unknown
/// keys are dropped). Any failure — no object, unparseable text, or a schema
/// key bound to a non-string-array value — yields the all-empty mapping.
#[must_use]
pub fn repair_or_reject(raw_text: &str, schema: &OutputSchema) -> BTreeMap<String, Vec<String>> {
    let empty = || -> BTreeMap<String, Vec<String>> {
        schema.keys.iter().map(|k| (k.clone(), Vec::new())).collect()
    };
    let Some(object_text) = first_balanced_object(raw_text) else {
        return empty();
    };
    let Ok(value) = serde_json::from_str::<serde_json::Value>(object_text) else {
        return empty();
    };
    let Some(object) = value.as_object() else {
        return empty();
    };
    let mut out = BTreeMap::new();
    for key in &schema.keys {
        match object.get(key) {
            None => {
                out.insert(key.clone(), Vec::new());
            }
            Some(serde_json::Value::Array(items)) => {
                let mut strings = Vec::with_capacity(items.len());
                for item in items {
                    let Some(s) = item.as_str() else {
                        return empty();
                    };
                    strings.push(s.to_string());
                }
                out.insert(key.clone(), strings);
            }
            Some(_) => return empty(),
        }
    }
    out
}

/// The first `{ ... }` substring with balanced braces, respecting strings
/// and escapes.
fn first_balanced_object(text: &str) -> Option<&str> {
    let start = text.find('{')?;
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if in_string {
            if escaped {
                escaped = false;
            } else if b == b'\\' {
                escaped = true;
            } else if b == b'"' {
                in_string = false;
            }
            continue;
        }
        match b {
            b'"' => in_string = true,
            b'{' => depth += 1,
            b'}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(&text[start..=i]);
                }
            }
            _ => {}
        }
    }
    None
}
