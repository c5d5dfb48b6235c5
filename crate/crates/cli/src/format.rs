//! Plain-text circuit files.
//!
//! The grammar is a line format: header lines first, then one gate per
//! line, with `#` starting a comment and tokens separated by whitespace.
//!
//! ```text
//! qubits <n>              # register width (required, first)
//! clean <i>               # clean-qubit marker (optional; absent = qubit 0)
//! outputs <i...>          # output qubits (required, at least one)
//! H q | X q | Z q | S q | SDG q | T q | TDG q
//! CNOT c t | CZ a b | CCX c1 c2 t
//! NCX <polaritybits> <controls...> <target>
//! RZ8 k q | RZZ8 k a b
//! NCP8 k <polaritybits> <qubits...>
//! ```
//!
//! `<polaritybits>` is a string of `0`/`1` giving one polarity per listed
//! control (`1` = trigger on one). Phase steps `k` count multiples of π/8
//! and must lie in `0..=15`. [`print_circuit`] emits the canonical form:
//! header in the order above, one gate per line, single spaces, no
//! comments. Parsing a printed circuit reproduces it exactly.

use dqc1::{Circuit, Gate};
use thiserror::Error;

/// Failure to turn a text file into a validated [`Circuit`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum FormatError {
    /// The text does not match the grammar. Lines and columns are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// The text parsed but the resulting circuit is not well formed.
    #[error(transparent)]
    Invalid(#[from] dqc1::Error),
}

fn parse_fail<T>(line: usize, column: usize, message: String) -> Result<T, FormatError> {
    Err(FormatError::Parse {
        line,
        column,
        message,
    })
}

/// A token and the 1-based column of its first character.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let uncommented = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in uncommented.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    text: &uncommented[s..i],
                    column: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token {
            text: &uncommented[s..],
            column: s + 1,
        });
    }
    tokens
}

fn parse_index(line: usize, token: &Token<'_>, what: &str) -> Result<usize, FormatError> {
    match token.text.parse() {
        Ok(value) => Ok(value),
        Err(_) => parse_fail(
            line,
            token.column,
            format!("invalid {what} `{}`", token.text),
        ),
    }
}

fn parse_phase_step(line: usize, token: &Token<'_>) -> Result<u8, FormatError> {
    match token.text.parse::<u8>() {
        Ok(k) if k < 16 => Ok(k),
        _ => parse_fail(
            line,
            token.column,
            format!("invalid phase step `{}` (expected 0..=15)", token.text),
        ),
    }
}

fn parse_polarity(line: usize, token: &Token<'_>) -> Result<Vec<bool>, FormatError> {
    if token.text.is_empty() || !token.text.bytes().all(|b| b == b'0' || b == b'1') {
        return parse_fail(
            line,
            token.column,
            format!(
                "invalid polarity string `{}` (expected one `0`/`1` per control)",
                token.text
            ),
        );
    }
    Ok(token.text.bytes().map(|b| b == b'1').collect())
}

/// Checks the operand count for a gate line; `mnemonic` is tokens[0].
fn expect_operands(
    line: usize,
    tokens: &[Token<'_>],
    count: usize,
) -> Result<(), FormatError> {
    if tokens.len() != count + 1 {
        return parse_fail(
            line,
            tokens[0].column,
            format!(
                "`{}` expects {count} operand{}, found {}",
                tokens[0].text,
                if count == 1 { "" } else { "s" },
                tokens.len() - 1
            ),
        );
    }
    Ok(())
}

fn parse_gate(line: usize, tokens: &[Token<'_>]) -> Result<Gate, FormatError> {
    let mnemonic = &tokens[0];
    let single = |gate: fn(usize) -> Gate| -> Result<Gate, FormatError> {
        expect_operands(line, tokens, 1)?;
        Ok(gate(parse_index(line, &tokens[1], "qubit index")?))
    };
    match mnemonic.text {
        "H" => single(Gate::H),
        "X" => single(Gate::X),
        "Z" => single(Gate::Z),
        "S" => single(Gate::S),
        "SDG" => single(Gate::Sdg),
        "T" => single(Gate::T),
        "TDG" => single(Gate::Tdg),
        "CNOT" => {
            expect_operands(line, tokens, 2)?;
            Ok(Gate::Cnot {
                control: parse_index(line, &tokens[1], "qubit index")?,
                target: parse_index(line, &tokens[2], "qubit index")?,
            })
        }
        "CZ" => {
            expect_operands(line, tokens, 2)?;
            Ok(Gate::Cz(
                parse_index(line, &tokens[1], "qubit index")?,
                parse_index(line, &tokens[2], "qubit index")?,
            ))
        }
        "CCX" => {
            expect_operands(line, tokens, 3)?;
            Ok(Gate::Toffoli {
                controls: [
                    parse_index(line, &tokens[1], "qubit index")?,
                    parse_index(line, &tokens[2], "qubit index")?,
                ],
                target: parse_index(line, &tokens[3], "qubit index")?,
            })
        }
        "NCX" => {
            if tokens.len() < 2 {
                return parse_fail(
                    line,
                    mnemonic.column,
                    "`NCX` expects a polarity string, controls, and a target".into(),
                );
            }
            let polarity = parse_polarity(line, &tokens[1])?;
            expect_operands(line, tokens, 1 + polarity.len() + 1)?;
            let controls = tokens[2..2 + polarity.len()]
                .iter()
                .map(|t| parse_index(line, t, "qubit index"))
                .collect::<Result<Vec<_>, _>>()?;
            let target = parse_index(line, &tokens[1 + polarity.len() + 1], "qubit index")?;
            Ok(Gate::Ncx {
                controls,
                polarity,
                target,
            })
        }
        "RZ8" => {
            expect_operands(line, tokens, 2)?;
            Ok(Gate::Rz8 {
                k: parse_phase_step(line, &tokens[1])?,
                qubit: parse_index(line, &tokens[2], "qubit index")?,
            })
        }
        "RZZ8" => {
            expect_operands(line, tokens, 3)?;
            Ok(Gate::Rzz8 {
                k: parse_phase_step(line, &tokens[1])?,
                qubits: (
                    parse_index(line, &tokens[2], "qubit index")?,
                    parse_index(line, &tokens[3], "qubit index")?,
                ),
            })
        }
        "NCP8" => {
            if tokens.len() < 3 {
                return parse_fail(
                    line,
                    mnemonic.column,
                    "`NCP8` expects a phase step, a polarity string, and qubits".into(),
                );
            }
            let k = parse_phase_step(line, &tokens[1])?;
            let polarity = parse_polarity(line, &tokens[2])?;
            expect_operands(line, tokens, 2 + polarity.len())?;
            let qubits = tokens[3..]
                .iter()
                .map(|t| parse_index(line, t, "qubit index"))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Gate::Ncp8 {
                qubits,
                polarity,
                k,
            })
        }
        other => parse_fail(line, mnemonic.column, format!("unknown gate `{other}`")),
    }
}

/// Parses a circuit file and validates the result.
pub fn parse_circuit_file(text: &str) -> Result<Circuit, FormatError> {
    let mut num_qubits: Option<usize> = None;
    let mut clean_qubit: Option<usize> = None;
    let mut saw_clean = false;
    let mut outputs: Option<Vec<usize>> = None;
    let mut gates = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw);
        let Some(head) = tokens.first() else {
            continue;
        };
        let in_header = gates.is_empty();
        match head.text {
            "qubits" => {
                if num_qubits.is_some() || !in_header {
                    return parse_fail(line, head.column, "unexpected `qubits` line".into());
                }
                expect_operands(line, &tokens, 1)?;
                num_qubits = Some(parse_index(line, &tokens[1], "qubit count")?);
            }
            "clean" => {
                if saw_clean || num_qubits.is_none() || !in_header {
                    return parse_fail(line, head.column, "unexpected `clean` line".into());
                }
                expect_operands(line, &tokens, 1)?;
                clean_qubit = Some(parse_index(line, &tokens[1], "qubit index")?);
                saw_clean = true;
            }
            "outputs" => {
                if outputs.is_some() || num_qubits.is_none() || !in_header {
                    return parse_fail(line, head.column, "unexpected `outputs` line".into());
                }
                if tokens.len() < 2 {
                    return parse_fail(
                        line,
                        head.column,
                        "`outputs` expects at least one qubit index".into(),
                    );
                }
                outputs = Some(
                    tokens[1..]
                        .iter()
                        .map(|t| parse_index(line, t, "qubit index"))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            _ => {
                if num_qubits.is_none() || outputs.is_none() {
                    return parse_fail(
                        line,
                        head.column,
                        "gate line before `qubits`/`outputs` header".into(),
                    );
                }
                gates.push(parse_gate(line, &tokens)?);
            }
        }
    }

    let Some(num_qubits) = num_qubits else {
        return parse_fail(1, 1, "missing `qubits` header".into());
    };
    let Some(outputs) = outputs else {
        return parse_fail(1, 1, "missing `outputs` header".into());
    };
    let mut circuit = Circuit::new(num_qubits, gates).with_outputs(outputs);
    circuit.clean_qubit = clean_qubit;
    circuit.validate()?;
    Ok(circuit)
}

fn polarity_string(polarity: &[bool]) -> String {
    polarity.iter().map(|&p| if p { '1' } else { '0' }).collect()
}

fn push_line(out: &mut String, head: &str, operands: impl IntoIterator<Item = String>) {
    out.push_str(head);
    for op in operands {
        out.push(' ');
        out.push_str(&op);
    }
    out.push('\n');
}

/// Renders a circuit in the canonical file form.
pub fn print_circuit(circuit: &Circuit) -> String {
    let mut out = String::new();
    push_line(&mut out, "qubits", [circuit.num_qubits.to_string()]);
    if let Some(clean) = circuit.clean_qubit {
        push_line(&mut out, "clean", [clean.to_string()]);
    }
    push_line(
        &mut out,
        "outputs",
        circuit.outputs.iter().map(|q| q.to_string()),
    );
    for gate in &circuit.gates {
        match gate {
            Gate::H(q) => push_line(&mut out, "H", [q.to_string()]),
            Gate::X(q) => push_line(&mut out, "X", [q.to_string()]),
            Gate::Z(q) => push_line(&mut out, "Z", [q.to_string()]),
            Gate::S(q) => push_line(&mut out, "S", [q.to_string()]),
            Gate::Sdg(q) => push_line(&mut out, "SDG", [q.to_string()]),
            Gate::T(q) => push_line(&mut out, "T", [q.to_string()]),
            Gate::Tdg(q) => push_line(&mut out, "TDG", [q.to_string()]),
            Gate::Cnot { control, target } => {
                push_line(&mut out, "CNOT", [control.to_string(), target.to_string()]);
            }
            Gate::Cz(a, b) => push_line(&mut out, "CZ", [a.to_string(), b.to_string()]),
            Gate::Toffoli { controls, target } => push_line(
                &mut out,
                "CCX",
                [
                    controls[0].to_string(),
                    controls[1].to_string(),
                    target.to_string(),
                ],
            ),
            Gate::Ncx {
                controls,
                polarity,
                target,
            } => push_line(
                &mut out,
                "NCX",
                std::iter::once(polarity_string(polarity))
                    .chain(controls.iter().map(|q| q.to_string()))
                    .chain(std::iter::once(target.to_string())),
            ),
            Gate::Rz8 { k, qubit } => {
                push_line(&mut out, "RZ8", [k.to_string(), qubit.to_string()]);
            }
            Gate::Rzz8 { k, qubits } => push_line(
                &mut out,
                "RZZ8",
                [k.to_string(), qubits.0.to_string(), qubits.1.to_string()],
            ),
            Gate::Ncp8 {
                qubits,
                polarity,
                k,
            } => push_line(
                &mut out,
                "NCP8",
                [k.to_string(), polarity_string(polarity)]
                    .into_iter()
                    .chain(qubits.iter().map(|q| q.to_string())),
            ),
        }
    }
    out
}
