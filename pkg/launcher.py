from dotenv import load_dotenv

from leafspan.app import build_cli

load_dotenv()

leafspan = build_cli()


if __name__ == "__main__":
    leafspan(prog_name="leafspan")
