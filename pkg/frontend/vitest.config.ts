import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // explorer.test.ts spawns the classification service and drives it
    testTimeout: 120_000,
    hookTimeout: 30_000,
  },
});
