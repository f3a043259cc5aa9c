void printString(char* ptr);

int main()
{
    char* ptr = (char*)malloc(8);
    printString(ptr);
    free(ptr);
    free(ptr);
}

void printString(char* ptr)
{
    gets(ptr);
    printf(ptr);
}
