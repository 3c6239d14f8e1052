// Ensures the figure-preset CSV fixtures exist before the suite runs.
import { execFileSync } from "node:child_process";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

export default function setup(): void {
  const here = dirname(fileURLToPath(import.meta.url));
  execFileSync(process.execPath, [join(here, "..", "scripts", "make-fixtures.mjs")], {
    stdio: "inherit",
  });
}
