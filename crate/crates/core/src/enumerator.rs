//! A four-register counter machine that emits listings under step budgets,
//! plus a round-robin (dovetailing) scheduler over several machines.
//!
//! Instruction set, registers `R0`..`R3`, constants `c ≥ 0`, absolute
//! addresses `a ≥ 0`:
//!
//! ```text
//! LOADI r c   r := c
//! ADDI  r c   r := r + c        (saturating)
//! SUBI  r c   r := max(r - c, 0)
//! JMP   a     goto a
//! JZ    r a   if r = 0 goto a
//! OUT   r     emit r
//! HALT
//! ```
//!
//! Every executed instruction costs one step. Emitting 0 or a value already
//! emitted is a no-op, so runs always yield valid listings. Running past the
//! last instruction halts without spending a step.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::listing::{Listing, Value};

pub const REGISTER_COUNT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProgramError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("instruction {address}: {reason}")]
    InvalidProgram { address: usize, reason: String },
    #[error("dovetail needs at least one program")]
    NoPrograms,
    #[error("slice must be at least 1")]
    ZeroSlice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Register(u8);

impl Register {
    pub fn new(index: u8) -> Option<Register> {
        ((index as usize) < REGISTER_COUNT).then_some(Register(index))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instruction {
    LoadI(Register, Value),
    AddI(Register, Value),
    SubI(Register, Value),
    Jmp(usize),
    Jz(Register, usize),
    Out(Register),
    Halt,
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::LoadI(r, c) => write!(f, "LOADI {r} {c}"),
            Instruction::AddI(r, c) => write!(f, "ADDI {r} {c}"),
            Instruction::SubI(r, c) => write!(f, "SUBI {r} {c}"),
            Instruction::Jmp(a) => write!(f, "JMP {a}"),
            Instruction::Jz(r, a) => write!(f, "JZ {r} {a}"),
            Instruction::Out(r) => write!(f, "OUT {r}"),
            Instruction::Halt => write!(f, "HALT"),
        }
    }
}

/// A validated program: every jump target is an instruction address.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumProgram {
    name: String,
    instructions: Vec<Instruction>,
}

impl EnumProgram {
    pub fn new(
        name: impl Into<String>,
        instructions: Vec<Instruction>,
    ) -> Result<Self, ProgramError> {
        let len = instructions.len();
        for (address, ins) in instructions.iter().enumerate() {
            if let Instruction::Jmp(target) | Instruction::Jz(_, target) = *ins {
                if target >= len {
                    return Err(ProgramError::InvalidProgram {
                        address,
                        reason: format!("jump target {target} outside 0..{len}"),
                    });
                }
            }
        }
        Ok(EnumProgram {
            name: name.into(),
            instructions,
        })
    }

    /// Parses the text format: one instruction per line, `;` starts a
    /// comment, mnemonics and register names are case-insensitive.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self, ProgramError> {
        let mut instructions = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let code = raw.split(';').next().unwrap_or("").trim();
            if code.is_empty() {
                continue;
            }
            instructions.push(
                parse_instruction(code).map_err(|message| ProgramError::Syntax {
                    line: idx + 1,
                    message,
                })?,
            );
        }
        EnumProgram::new(name, instructions)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl fmt::Display for EnumProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "; {}", self.name)?;
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

fn parse_register(token: &str) -> Result<Register, String> {
    let digits = token
        .strip_prefix('R')
        .or_else(|| token.strip_prefix('r'))
        .ok_or_else(|| format!("expected a register, found {token:?}"))?;
    digits
        .parse::<u8>()
        .ok()
        .and_then(Register::new)
        .ok_or_else(|| format!("no such register {token:?} (R0..R3)"))
}

fn parse_number<T: std::str::FromStr>(token: &str, what: &str) -> Result<T, String> {
    token
        .parse::<T>()
        .map_err(|_| format!("expected {what}, found {token:?}"))
}

fn parse_instruction(code: &str) -> Result<Instruction, String> {
    let tokens: Vec<&str> = code.split_whitespace().collect();
    let mnemonic = tokens[0].to_ascii_uppercase();
    let args = &tokens[1..];
    let arity = match mnemonic.as_str() {
        "LOADI" | "ADDI" | "SUBI" | "JZ" => 2,
        "JMP" | "OUT" => 1,
        "HALT" => 0,
        other => return Err(format!("unknown mnemonic {other:?}")),
    };
    if args.len() != arity {
        return Err(format!(
            "{mnemonic} takes {arity} operand(s), found {}",
            args.len()
        ));
    }
    Ok(match mnemonic.as_str() {
        "LOADI" => Instruction::LoadI(
            parse_register(args[0])?,
            parse_number(args[1], "a constant")?,
        ),
        "ADDI" => Instruction::AddI(
            parse_register(args[0])?,
            parse_number(args[1], "a constant")?,
        ),
        "SUBI" => Instruction::SubI(
            parse_register(args[0])?,
            parse_number(args[1], "a constant")?,
        ),
        "JMP" => Instruction::Jmp(parse_number(args[0], "an address")?),
        "JZ" => Instruction::Jz(
            parse_register(args[0])?,
            parse_number(args[1], "an address")?,
        ),
        "OUT" => Instruction::Out(parse_register(args[0])?),
        _ => Instruction::Halt,
    })
}

/// The record of one (possibly dovetailed) run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumRun {
    pub program: String,
    pub step_budget: u64,
    pub output_cap: usize,
    pub listing: Listing,
    pub steps_used: u64,
    pub halted: bool,
}

impl EnumRun {
    pub fn to_json(&self) -> String {
        // Going through `Value` sorts the keys.
        serde_json::to_value(self)
            .and_then(|v| serde_json::to_string(&v))
            .expect("EnumRun is always serializable")
    }
}

enum Tick {
    Ran(Option<Value>),
    Halted,
}

struct Machine<'p> {
    program: &'p EnumProgram,
    registers: [Value; REGISTER_COUNT],
    pc: usize,
    halted: bool,
}

impl<'p> Machine<'p> {
    fn new(program: &'p EnumProgram) -> Self {
        Machine {
            program,
            registers: [0; REGISTER_COUNT],
            pc: 0,
            halted: false,
        }
    }

    /// Executes one instruction. `Halted` means no step was spent.
    fn tick(&mut self) -> Tick {
        if self.halted {
            return Tick::Halted;
        }
        let Some(&ins) = self.program.instructions.get(self.pc) else {
            self.halted = true;
            return Tick::Halted;
        };
        self.pc += 1;
        let mut emitted = None;
        match ins {
            Instruction::LoadI(r, c) => self.registers[r.index()] = c,
            Instruction::AddI(r, c) => {
                self.registers[r.index()] = self.registers[r.index()].saturating_add(c)
            }
            Instruction::SubI(r, c) => {
                self.registers[r.index()] = self.registers[r.index()].saturating_sub(c)
            }
            Instruction::Jmp(a) => self.pc = a,
            Instruction::Jz(r, a) => {
                if self.registers[r.index()] == 0 {
                    self.pc = a;
                }
            }
            Instruction::Out(r) => emitted = Some(self.registers[r.index()]),
            Instruction::Halt => self.halted = true,
        }
        Tick::Ran(emitted)
    }
}

/// Accumulates emissions with global dedup.
struct Emitter {
    values: Vec<Value>,
    seen: HashSet<Value>,
    cap: usize,
}

impl Emitter {
    fn new(cap: usize) -> Self {
        Emitter {
            values: Vec::new(),
            seen: HashSet::new(),
            cap,
        }
    }

    fn emit(&mut self, value: Value) {
        if value >= 1 && self.seen.insert(value) {
            self.values.push(value);
        }
    }

    fn full(&self) -> bool {
        self.values.len() >= self.cap
    }

    fn into_listing(self) -> Listing {
        Listing::new(self.values).expect("emitter keeps values distinct and positive")
    }
}

/// Runs `p` from all-zero registers at instruction 0 until it halts, the
/// step budget is spent, or `output_cap` distinct values have been emitted.
pub fn run_budgeted(p: &EnumProgram, step_budget: u64, output_cap: usize) -> EnumRun {
    let mut machine = Machine::new(p);
    let mut out = Emitter::new(output_cap);
    let mut steps = 0;
    while steps < step_budget && !out.full() {
        match machine.tick() {
            Tick::Halted => break,
            Tick::Ran(emitted) => {
                steps += 1;
                if let Some(v) = emitted {
                    out.emit(v);
                }
            }
        }
    }
    EnumRun {
        program: p.name.clone(),
        step_budget,
        output_cap,
        listing: out.into_listing(),
        steps_used: steps,
        halted: machine.halted,
    }
}

/// Round-robin over `programs`: each live machine runs up to `slice` steps
/// per turn, in sequence order. `step_budget` and `output_cap` are shared
/// by all machines; the run stops when either is reached or every machine
/// has halted.
pub fn dovetail_union(
    programs: &[EnumProgram],
    slice: u64,
    step_budget: u64,
    output_cap: usize,
) -> Result<EnumRun, ProgramError> {
    if programs.is_empty() {
        return Err(ProgramError::NoPrograms);
    }
    if slice == 0 {
        return Err(ProgramError::ZeroSlice);
    }
    let mut machines: Vec<Machine<'_>> = programs.iter().map(Machine::new).collect();
    let mut out = Emitter::new(output_cap);
    let mut steps = 0;
    'schedule: while machines.iter().any(|m| !m.halted) {
        for machine in machines.iter_mut().filter(|m| !m.halted) {
            for _ in 0..slice {
                if steps >= step_budget || out.full() {
                    break 'schedule;
                }
                match machine.tick() {
                    Tick::Halted => break,
                    Tick::Ran(emitted) => {
                        steps += 1;
                        if let Some(v) = emitted {
                            out.emit(v);
                        }
                    }
                }
            }
        }
    }
    let program = programs
        .iter()
        .map(EnumProgram::name)
        .collect::<Vec<_>>()
        .join("+");
    Ok(EnumRun {
        program,
        step_budget,
        output_cap,
        listing: out.into_listing(),
        steps_used: steps,
        halted: machines.iter().all(|m| m.halted),
    })
}
