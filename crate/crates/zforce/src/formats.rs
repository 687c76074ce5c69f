//! Text formats: PACE graphs and tree decompositions (1-based), plain edge
//! lists, hypergraphs, traces, vertex lists and partitions (0-based).

use std::fmt::Write as _;

use zforce_core::treedec::{NiceTd, NodeKind, TreeDecomposition};
use zforce_core::{Graph, GraphError, Hypergraph, RuleApplication};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header")]
    MissingHeader,
    #[error("expected {expected} {what}, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// Numbered lines with comments and blank lines removed.
fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace().map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("not a number: {t:?}")))).collect()
}

fn one_based(line: usize, v: usize) -> Result<usize, ParseError> {
    v.checked_sub(1).ok_or_else(|| syntax(line, "vertex ids are 1-based"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Pace,
    EdgeList,
}

impl GraphFormat {
    /// PACE if the first content line is a `p` header, else edge list.
    pub fn sniff(text: &str) -> GraphFormat {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with("p ") => GraphFormat::Pace,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match GraphFormat::sniff(text) {
        GraphFormat::Pace => parse_pace_graph(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Pace => write_pace_graph(g),
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

pub fn parse_pace_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, "c");
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "p" {
        return Err(syntax(hl, "expected \"p tw <n> <m>\""));
    }
    let n = numbers(hl, parts[2])?[0];
    let m = numbers(hl, parts[3])?[0];
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let ids = numbers(line, l)?;
        if ids.len() != 2 {
            return Err(syntax(line, "expected two vertex ids"));
        }
        edges.push((one_based(line, ids[0])?, one_based(line, ids[1])?));
    }
    if edges.len() != m {
        return Err(ParseError::Count { what: "edges", expected: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_pace_graph(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let head = numbers(hl, header)?;
    if head.len() != 1 {
        return Err(syntax(hl, "expected the vertex count alone"));
    }
    let mut edges = Vec::new();
    for (line, l) in lines {
        let ids = numbers(line, l)?;
        if ids.len() != 2 {
            return Err(syntax(line, "expected two vertex ids"));
        }
        edges.push((ids[0], ids[1]));
    }
    Ok(Graph::from_edges(head[0], edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Header `<|X|> <|E|>`, then exactly `|E|` edge lines (an empty line is an
/// empty edge); `#` lines are comments.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.starts_with('#'));
    let (hl, header) = lines.by_ref().find(|(_, l)| !l.is_empty()).ok_or(ParseError::MissingHeader)?;
    let head = numbers(hl, header)?;
    if head.len() != 2 {
        return Err(syntax(hl, "expected \"<vertices> <edges>\""));
    }
    let mut edges = Vec::with_capacity(head[1]);
    for (line, l) in lines.take(head[1]) {
        edges.push(numbers(line, l)?);
    }
    if edges.len() != head[1] {
        return Err(ParseError::Count { what: "hyperedges", expected: head[1], found: edges.len() });
    }
    Ok(Hypergraph::new(head[0], edges)?)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edges().len());
    for e in h.edges() {
        out.push_str(&join(e.iter()));
        out.push('\n');
    }
    out
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut lines = content_lines(text, "c");
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 5 || parts[0] != "s" || parts[1] != "td" {
        return Err(syntax(hl, "expected \"s td <bags> <width+1> <n>\""));
    }
    let count = numbers(hl, parts[2])?[0];
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (line, l) in lines {
        if let Some(rest) = l.strip_prefix("b ") {
            let ids = numbers(line, rest)?;
            let (&i, vs) = ids.split_first().ok_or_else(|| syntax(line, "bag line without index"))?;
            let i = one_based(line, i)?;
            if i >= count {
                return Err(syntax(line, format!("bag {} out of range", i + 1)));
            }
            if bags[i].is_some() {
                return Err(syntax(line, format!("bag {} given twice", i + 1)));
            }
            bags[i] = Some(vs.iter().map(|&v| one_based(line, v)).collect::<Result<_, _>>()?);
        } else {
            let ids = numbers(line, l)?;
            if ids.len() != 2 {
                return Err(syntax(line, "expected a bag line or a tree edge"));
            }
            edges.push((one_based(line, ids[0])?, one_based(line, ids[1])?));
        }
    }
    let found = bags.iter().filter(|b| b.is_some()).count();
    if found != count {
        return Err(ParseError::Count { what: "bags", expected: count, found });
    }
    Ok(TreeDecomposition::new(bags.into_iter().map(Option::unwrap).collect(), edges))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let width1 = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags.len(), width1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let ids: Vec<String> = bag.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "b {} {}", i + 1, ids.join(" ")).unwrap();
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// One node per line: `<index> <kind> [vertex] children=<..> bag=<..>`,
/// children before parents, 0-based.
pub fn write_nice(nice: &NiceTd) -> String {
    let mut out = format!("nice {} {}\n", nice.len(), nice.width() + 1);
    for (i, node) in nice.nodes.iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Leaf => "leaf".to_string(),
            NodeKind::Introduce(v) => format!("introduce {v}"),
            NodeKind::Rule(v) => format!("rule {v}"),
            NodeKind::Forget(v) => format!("forget {v}"),
            NodeKind::Join => "join".to_string(),
        };
        writeln!(
            out,
            "{i} {kind} children={} bag={}",
            join_with(node.children.iter(), ","),
            join_with(node.bag.iter(), ",")
        )
        .unwrap();
    }
    out
}

pub fn parse_trace(text: &str) -> Result<Vec<RuleApplication>, ParseError> {
    content_lines(text, "#")
        .map(|(line, l)| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let kind = match parts.first().map(|k| k.to_ascii_uppercase()) {
                Some(k) if k.len() == 1 => zforce_core::Rule::from_letter(k.chars().next().unwrap()),
                _ => None,
            }
            .ok_or_else(|| syntax(line, "expected a rule letter Z, T or D"))?;
            let ids = numbers(line, &parts[1..].join(" "))?;
            if ids.len() != 2 {
                return Err(syntax(line, "expected \"<kind> <actor> <target>\""));
            }
            Ok(RuleApplication { kind, actor: ids[0], target: ids[1] })
        })
        .collect()
}

pub fn write_trace(trace: &[RuleApplication]) -> String {
    trace.iter().map(|r| format!("{r}\n")).collect()
}

/// Vertex ids, one per line (whitespace-separated ids on a line are accepted
/// as well).
pub fn parse_ids(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text, "#") {
        out.extend(numbers(line, l)?);
    }
    Ok(out)
}

pub fn write_ids(ids: impl IntoIterator<Item = usize>) -> String {
    ids.into_iter().map(|v| format!("{v}\n")).collect()
}

/// One class per line, space-separated ids.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    content_lines(text, "#").map(|(line, l)| numbers(line, l)).collect()
}

pub fn write_partition(classes: &[Vec<usize>]) -> String {
    classes.iter().map(|c| format!("{}\n", join(c.iter().copied()))).collect()
}

pub fn join(ids: impl IntoIterator<Item = usize>) -> String {
    join_with(ids, " ")
}

fn join_with<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
