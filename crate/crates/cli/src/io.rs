use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use mcover::{Error, Instance, Result};

/// Reads the whole of `path`, or stdin when `None`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    let res = match path {
        Some(p) => File::open(p).and_then(|mut f| f.read_to_string(&mut text)),
        None => io::stdin().read_to_string(&mut text),
    };
    res.map_err(|e| Error::Parameter(format!("cannot read {}: {e}", describe(path))))?;
    Ok(text)
}

pub fn read_instance(path: Option<&Path>) -> Result<Instance> {
    Instance::parse(&read_text(path)?)
}

fn describe(path: Option<&Path>) -> String {
    path.map_or_else(|| "stdin".to_string(), |p| p.display().to_string())
}

/// Buffered output to a file or stdout.
pub struct Output {
    sink: BufWriter<Box<dyn Write>>,
}

impl Output {
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(
                File::create(p).map_err(|e| Error::Parameter(format!("cannot create {}: {e}", p.display())))?,
            ),
            None => Box::new(io::stdout()),
        };
        Ok(Output {
            sink: BufWriter::new(sink),
        })
    }

    pub fn write(&mut self, text: &str) -> Result<()> {
        self.sink
            .write_all(text.as_bytes())
            .map_err(|e| Error::Parameter(format!("write failed: {e}")))
    }

    pub fn line(&mut self, text: &str) -> Result<()> {
        self.write(text)?;
        self.write("\n")
    }

    /// Writes every line of `text` prefixed with `# `.
    pub fn comment(&mut self, text: &str) -> Result<()> {
        for l in text.lines() {
            self.line(&format!("# {l}"))?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.sink
            .flush()
            .map_err(|e| Error::Parameter(format!("write failed: {e}")))
    }
}
