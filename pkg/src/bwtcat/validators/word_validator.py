"""Word validation for transform inputs."""

SENTINEL_BYTE = 0x24


class WordValidator:
    """Validates words handed to the transforms.

    Words are byte strings; the byte 0x24 prints as the end-marker and is therefore
    reserved whenever the end-marker variant is computed.
    """

    def validate(self, word: bytes) -> bool:
        """Validates that the word has at least one symbol.

        Args:
            word: The word to validate.

        Returns:
            bool: True if the word is non-empty, False otherwise.
        """
        return len(word) > 0

    def validate_dollar_free(self, word: bytes) -> bool:
        """Validates that the word can be terminated by the end-marker.

        Args:
            word: The word to validate.

        Returns:
            bool: True if the reserved byte does not occur, False otherwise.
        """
        return SENTINEL_BYTE not in word
