/* Session-side chat state: an append-only transcript and a one-in-flight
 * submit lock. A failed send changes nothing. */

import type { MessageResponse } from "./api.js";

export interface Entry {
  role: "user" | "assistant";
  text: string;
}

export class SessionController {
  readonly transcript: Entry[] = [];
  private inFlight = false;

  constructor(
    private readonly send: (text: string) => Promise<MessageResponse>,
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  /* Returns null when ignored: empty text or a turn already in flight. */
  async submit(text: string): Promise<MessageResponse | null> {
    if (this.inFlight || !text.trim()) return null;
    this.inFlight = true;
    try {
      const response = await this.send(text);
      this.transcript.push({ role: "user", text });
      this.transcript.push({ role: "assistant", text: response.reply });
      return response;
    } finally {
      this.inFlight = false;
    }
  }
}
