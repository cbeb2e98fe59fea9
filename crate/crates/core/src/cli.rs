//! The `uast` command: a line-streaming filter between schemes.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::pipeline::{Converter, Scheme, StreamError};
use crate::tables::tables_tsv;
use crate::token::Mode;
use crate::uast::UastStyle;

/// Transliterate between UAST, UAST-IO, IAST and Devanagari.
#[derive(Debug, Parser)]
#[command(name = "uast", version)]
struct Args {
    /// Input scheme: uast, uast-io, iast or devanagari
    #[arg(short = 'f', long = "from", value_name = "SCHEME", required_unless_present = "dump_tables")]
    from: Option<Scheme>,
    /// Output scheme: uast, uast-io, iast or devanagari
    #[arg(short = 't', long = "to", value_name = "SCHEME", required_unless_present = "dump_tables")]
    to: Option<Scheme>,
    /// Read from FILE instead of stdin
    #[arg(short = 'i', value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write to FILE instead of stdout
    #[arg(short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
    /// Pass unconvertible text through instead of failing
    #[arg(long)]
    lenient: bool,
    /// Omit the implicit vowel a in UAST output where possible
    #[arg(long)]
    compact: bool,
    /// Print the diacritic table as TSV and exit
    #[arg(long)]
    dump_tables: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs the command with `args` (without the program name). Returns the
/// process exit code: 0 on success, 1 on conversion or I/O failure, 2 on
/// usage errors.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("uast".into()).chain(args.into_iter().map(Into::into));
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "uast: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(
    args: &Args,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, StreamError> {
    let mut output: Box<dyn Write + '_> = match &args.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| with_path(e, path))?)),
        None => Box::new(BufWriter::new(stdout)),
    };
    if args.dump_tables {
        output.write_all(tables_tsv().as_bytes())?;
        output.flush()?;
        return Ok(EXIT_OK);
    }
    let (Some(from), Some(to)) = (args.from, args.to) else {
        unreachable!("clap enforces --from and --to");
    };
    let mode = if args.lenient { Mode::Lenient } else { Mode::Strict };
    let style = if args.compact { UastStyle::Compact } else { UastStyle::Explicit };
    let converter = Converter::new(from, to).mode(mode).uast_style(style);

    let mut file_input;
    let input: &mut dyn BufRead = match &args.input {
        Some(path) => {
            file_input = BufReader::new(File::open(path).map_err(|e| with_path(e, path))?);
            &mut file_input
        }
        None => stdin,
    };
    let summary = converter.convert_stream(input, &mut output, |e| {
        let _ = writeln!(stderr, "{e}");
    })?;
    Ok(if summary.failed_lines > 0 { EXIT_FAILURE } else { EXIT_OK })
}

fn with_path(e: io::Error, path: &std::path::Path) -> io::Error {
    io::Error::new(e.kind(), format!("{}: {e}", path.display()))
}
