/** Session ids are minted per page load; "reset" simply mints a new one. */
export function newSessionId(): string {
  const noise = Math.random().toString(36).slice(2, 10);
  return `web-${Date.now().toString(36)}-${noise}`;
}
