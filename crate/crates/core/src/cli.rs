//! The `ntru-lab` command line.
//!
//! Exit codes: 0 success, 1 attack demo finished with a rate below 1.0,
//! 2 usage error, 3 domain error. Error lines start with `error:`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classical::{
    shift_decrypt, shift_encrypt, substitution_decrypt, substitution_encrypt, PermutationKey,
    ShiftKey, Z26Text,
};
use crate::formats;
use crate::games::{
    run_trials, summary_line, transcript_line, AdvantageEstimate, CoinFlipAdversary, GameKind,
    NtruCpaAdversary, NtruScheme,
};
use crate::ntru::{self, NtruParams, Profile};
use crate::random::{fresh_seed, seeded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ATTACK_BELOW_ONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ntru-lab",
    version,
    about = "Textbook NTRU and its IND-CPA break"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a key pair into <out-prefix>.pub and <out-prefix>.sec
    Keygen {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Encrypt a plaintext file (polynomial, or letters when p = 3)
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decrypt a ciphertext file
    Decrypt {
        #[arg(long = "sec")]
        secret: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Write the plaintext as letters instead of a polynomial
        #[arg(long)]
        text: bool,
    },
    /// Run the x = 1 distinguisher against textbook NTRU
    AttackDemo {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Guess with a fair coin instead (baseline)
        #[arg(long)]
        coin_flip: bool,
        #[arg(long, value_enum, default_value_t = GameFlag::Cpa)]
        game: GameFlag,
    },
    /// Shift cipher over Z_26
    Shift {
        #[arg(long, allow_negative_numbers = true)]
        key: i64,
        #[arg(long)]
        text: String,
        #[arg(long)]
        decrypt: bool,
    },
    /// Substitution cipher; the key lists the images of a..z
    Subst {
        #[arg(long)]
        key: String,
        #[arg(long)]
        text: String,
        #[arg(long)]
        decrypt: bool,
    },
}

#[derive(Debug, Args)]
struct ParamFlags {
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    p: i64,
    #[arg(long, default_value_t = 41)]
    q: i64,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Skip the q > (6d+1)p decryption bound
    #[arg(long)]
    unchecked: bool,
}

impl ParamFlags {
    fn validate(&self) -> Result<NtruParams, String> {
        let profile = if self.unchecked {
            Profile::Unchecked
        } else {
            Profile::GuaranteedDecryption
        };
        NtruParams::new(self.n, self.p, self.q, self.d, profile).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GameFlag {
    Cpa,
    Cca1,
    Cca2,
}

impl From<GameFlag> for GameKind {
    fn from(g: GameFlag) -> Self {
        match g {
            GameFlag::Cpa => GameKind::Cpa,
            GameFlag::Cca1 => GameKind::Cca1,
            GameFlag::Cca2 => GameKind::Cca2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_DOMAIN
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), String> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Keygen {
            params,
            seed,
            out_prefix,
        } => {
            let params = params.validate()?;
            let seed = seed.unwrap_or_else(fresh_seed);
            emit(out, format!("seed {seed}"))?;
            let kp = ntru::keygen(&params, &mut seeded(seed)).map_err(|e| e.to_string())?;
            let pub_path = with_suffix(&out_prefix, ".pub");
            let sec_path = with_suffix(&out_prefix, ".sec");
            write(&pub_path, &formats::write_public_key(&kp.public))?;
            write(&sec_path, &formats::write_secret_key(&kp.secret))?;
            emit(out, format!("public {}", pub_path.display()))?;
            emit(out, format!("secret {}", sec_path.display()))?;
            Ok(EXIT_OK)
        }
        Command::Encrypt {
            public,
            input,
            out: out_path,
            seed,
        } => {
            let pk = formats::parse_public_key(&read(&public)?)
                .map_err(|e| format!("{}: {e}", public.display()))?;
            let params = *pk.params();
            let m = formats::parse_plaintext(&params, &read(&input)?)
                .map_err(|e| format!("{}: {e}", input.display()))?;
            let seed = seed.unwrap_or_else(fresh_seed);
            emit(out, format!("seed {seed}"))?;
            let e =
                ntru::encrypt(&params, &pk, &m, &mut seeded(seed)).map_err(|e| e.to_string())?;
            write(&out_path, &formats::write_ciphertext(&params, &e))?;
            Ok(EXIT_OK)
        }
        Command::Decrypt {
            secret,
            input,
            out: out_path,
            text,
        } => {
            let sk = formats::parse_secret_key(&read(&secret)?)
                .map_err(|e| format!("{}: {e}", secret.display()))?;
            let (params, e) = formats::parse_ciphertext(&read(&input)?)
                .map_err(|e| format!("{}: {e}", input.display()))?;
            let m = ntru::decrypt(&params, &sk, &e).map_err(|e| e.to_string())?;
            let body = if text {
                let mut letters = formats::decode_letters(m.poly()).map_err(|e| e.to_string())?;
                letters.push('\n');
                letters
            } else {
                formats::write_plaintext(&m)
            };
            write(&out_path, &body)?;
            Ok(EXIT_OK)
        }
        Command::AttackDemo {
            params,
            trials,
            seed,
            coin_flip,
            game,
        } => {
            let params = params.validate()?;
            if trials == 0 {
                return Err("trials must be at least 1".into());
            }
            let seed = seed.unwrap_or_else(fresh_seed);
            emit(out, format!("seed {seed}"))?;
            let scheme = NtruScheme::new(params);
            let mut rng = seeded(seed);
            let outcomes = if coin_flip {
                run_trials(
                    &scheme,
                    &mut CoinFlipAdversary::for_ntru(&params),
                    game.into(),
                    trials,
                    &mut rng,
                )
            } else {
                run_trials(
                    &scheme,
                    &mut NtruCpaAdversary,
                    game.into(),
                    trials,
                    &mut rng,
                )
            }
            .map_err(|e| e.to_string())?;
            for (i, o) in outcomes.iter().enumerate() {
                emit(out, transcript_line(i, o))?;
            }
            let estimate = AdvantageEstimate::from_outcomes(&outcomes);
            emit(out, summary_line(&estimate))?;
            Ok(if estimate.wins == estimate.trials {
                EXIT_OK
            } else {
                EXIT_ATTACK_BELOW_ONE
            })
        }
        Command::Shift { key, text, decrypt } => {
            let key = ShiftKey::new(key).map_err(|e| e.to_string())?;
            let x = Z26Text::encode(&text).map_err(|e| e.to_string())?;
            let y = if decrypt {
                shift_decrypt(&x, key)
            } else {
                shift_encrypt(&x, key)
            };
            emit(out, y.decode())?;
            Ok(EXIT_OK)
        }
        Command::Subst { key, text, decrypt } => {
            let pi = PermutationKey::from_letters(&key).map_err(|e| e.to_string())?;
            let x = Z26Text::encode(&text).map_err(|e| e.to_string())?;
            let y = if decrypt {
                substitution_decrypt(&x, &pi)
            } else {
                substitution_encrypt(&x, &pi)
            };
            emit(out, y.decode())?;
            Ok(EXIT_OK)
        }
    }
}
