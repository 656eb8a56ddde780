// reviewed with https://chat.openai.com/share/dddddddd-dddd-4ddd-8ddd-dddddddddddd
class Gamma {}
